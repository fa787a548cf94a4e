#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "infoflow/info.hpp"

namespace infoflow {

enum class BinaryOp { Add, Mul };

// Information efficiency of a single binary operation. With distinct
// operands: info(a∘b) - info(a) - info(b). With same_operand set (the two
// children are the identical subexpression): info(a∘a) - info(a), so a single
// appearance of the variable is charged once. Operands must be >= 1.
double delta_node(BinaryOp op, const BigNat& a, const BigNat& b, bool same_operand);

// Arithmetic expression tree. pow(base, e) stands for e-fold multiplication
// of the same subexpression and contributes info(b^e) - info(b); succ
// contributes info(v+1) - info(v).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Constant, Variable, Add, Mul, Pow, Succ };
  Kind kind;
  BigNat value;          // Constant
  std::string name;      // Variable
  ExprPtr lhs, rhs;      // children (rhs unused for Pow/Succ)
  std::uint64_t exponent = 0;  // Pow
};

ExprPtr expr_constant(BigNat value);
ExprPtr expr_variable(std::string name);
ExprPtr expr_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr expr_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr expr_pow(ExprPtr base, std::uint64_t exponent);
ExprPtr expr_succ(ExprPtr child);

// Grammar: sum of products of atoms; atoms are naturals, identifiers,
// succ(expr), or parenthesized expressions, optionally raised with ^<nat>.
ExprPtr parse_expr(const std::string& text);
std::string format_expr(const Expr& e);

using Env = std::map<std::string, BigNat>;

struct DeltaReport {
  BigNat value;         // evaluation result
  double node_delta = 0.0;     // contribution of the outermost operation
  double history_delta = 0.0;  // sum over all internal nodes
  std::vector<std::pair<std::string, double>> per_node;
};

// Bottom-up evaluation. A binary node is charged as same-operand exactly when
// its children are structurally identical subtrees; equal values reached by
// different subexpressions count as distinct.
DeltaReport delta_tree(const ExprPtr& e, const Env& env);

// Multivariate integer polynomial: a sum of coefficient * monomial terms.
struct Polynomial {
  struct Term {
    long long coeff = 0;
    std::vector<std::uint32_t> exponents;  // one per variable
  };
  std::uint32_t arity = 0;
  std::vector<Term> terms;

  std::uint32_t degree() const;                  // max total degree
  BigNat eval(std::span<const BigNat> at) const;  // may be negative
};

// Text format: "1*x1^3 + 1*x2^3 - 1*x3^3"; coefficient and exponent default
// to 1 when omitted.
Polynomial parse_polynomial(const std::string& text);
std::string format_polynomial(const Polynomial& p);

// info(p(inputs)) - tuple_info(inputs). Throws std::domain_error when
// p(inputs) < 1.
double delta_poly(const Polynomial& p, std::span<const BigNat> inputs);

// k independent uniforms from [2^t, 2^(t+1)), deterministic given the seed.
std::vector<BigNat> sample_typical_set(std::uint64_t k, unsigned t, std::uint64_t seed);

enum class InfoClass { Discarding, Conserving, Expanding };
const char* to_string(InfoClass c);

struct ClassifyRow {
  unsigned t = 0;
  double mean_delta = 0.0;
  double stddev = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t rejected = 0;
};

struct Classification {
  InfoClass cls;
  double slope = 0.0;  // least-squares slope of mean delta against t
  std::vector<ClassifyRow> rows;
};

// Mean delta per magnitude window, with rejection resampling for inputs where
// the polynomial is not positive. Deterministic given the seed and schedule,
// independent of any work scheduling. Throws budget_error when the rejection
// rate passes 90% in a window.
Classification classify_polynomial(const Polynomial& p, std::span<const unsigned> t_schedule,
                                   std::uint64_t samples_per_t, std::uint64_t seed,
                                   double slope_threshold = 0.25);

void write_classification_csv(const Classification& c, std::ostream& out);

struct DioCount {
  std::uint64_t solutions = 0;
  std::uint64_t total = 0;
  double density = 0.0;
  std::vector<std::vector<std::uint64_t>> witnesses;  // first few solutions found
};

// Exhaustive count of p = 0 over [1, bound]^k. exclude_trivial skips tuples
// with a repeated coordinate. Throws budget_error when bound^k exceeds the
// budget.
DioCount diophantine_density(const Polynomial& p, std::uint64_t bound, bool exclude_trivial,
                             std::uint64_t budget, std::size_t witness_limit = 0);

// |delta((x+y)+z) - delta(x+(y+z))| = |info(x) + info(y+z) - info(x+y) - info(z)|.
double nonassoc_gap(const BigNat& x, const BigNat& y, const BigNat& z);

}  // namespace infoflow
