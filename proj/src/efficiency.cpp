#include "infoflow/efficiency.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "infoflow/rng.hpp"

namespace infoflow {

namespace {

// delta in configured-base units from log2 parts; exponent differences stay
// integral so expressions like info(2x) - info(x) come out exact.
double delta_from_parts(const Log2Parts& out, const Log2Parts& in1) {
  return (static_cast<double>(out.exp - in1.exp) + (out.frac - in1.frac)) * base_scale();
}

double delta_from_parts(const Log2Parts& out, const Log2Parts& in1, const Log2Parts& in2) {
  // Combine the operands with a commutative sum first, so swapping the
  // inputs gives a bit-identical delta.
  return (static_cast<double>(out.exp - (in1.exp + in2.exp)) +
          (out.frac - (in1.frac + in2.frac))) *
         base_scale();
}

BigNat apply_op(BinaryOp op, const BigNat& a, const BigNat& b) {
  return op == BinaryOp::Add ? BigNat(a + b) : BigNat(a * b);
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

double delta_node(BinaryOp op, const BigNat& a, const BigNat& b, bool same_operand) {
  if (a < 1 || b < 1) throw std::domain_error("delta_node requires operands >= 1");
  const BigNat out = apply_op(op, a, b);
  if (same_operand) {
    if (a != b) throw std::invalid_argument("same_operand set but operand values differ");
    return delta_from_parts(log2_parts(out), log2_parts(a));
  }
  return delta_from_parts(log2_parts(out), log2_parts(a), log2_parts(b));
}

ExprPtr expr_constant(BigNat value) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Constant;
  e->value = std::move(value);
  return e;
}

ExprPtr expr_variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Variable;
  e->name = std::move(name);
  return e;
}

static ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr expr_add(ExprPtr lhs, ExprPtr rhs) {
  return make_binary(Expr::Kind::Add, std::move(lhs), std::move(rhs));
}

ExprPtr expr_mul(ExprPtr lhs, ExprPtr rhs) {
  return make_binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs));
}

ExprPtr expr_pow(ExprPtr base, std::uint64_t exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

ExprPtr expr_succ(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Succ;
  e->lhs = std::move(child);
  return e;
}

std::string format_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant: {
      std::ostringstream out;
      out << e.value;
      return out.str();
    }
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Add:
      return "(" + format_expr(*e.lhs) + "+" + format_expr(*e.rhs) + ")";
    case Expr::Kind::Mul:
      return "(" + format_expr(*e.lhs) + "*" + format_expr(*e.rhs) + ")";
    case Expr::Kind::Pow:
      return format_expr(*e.lhs) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Succ:
      return "succ(" + format_expr(*e.lhs) + ")";
  }
  return {};
}

namespace {

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Constant:
      return a.value == b.value;
    case Expr::Kind::Variable:
      return a.name == b.name;
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    case Expr::Kind::Pow:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Succ:
      return structurally_equal(*a.lhs, *b.lhs);
  }
  return false;
}

struct TreeWalk {
  const Env& env;
  DeltaReport report;

  BigNat walk(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Constant:
        return e.value;
      case Expr::Kind::Variable: {
        auto it = env.find(e.name);
        if (it == env.end()) throw std::invalid_argument("unbound variable: " + e.name);
        return it->second;
      }
      case Expr::Kind::Add:
      case Expr::Kind::Mul: {
        const BigNat a = walk(*e.lhs);
        const BigNat b = walk(*e.rhs);
        if (a < 1 || b < 1) throw std::domain_error("zero intermediate value in " + format_expr(e));
        const bool same = structurally_equal(*e.lhs, *e.rhs);
        const auto op = e.kind == Expr::Kind::Add ? BinaryOp::Add : BinaryOp::Mul;
        const double d = delta_node(op, a, b, same);
        record(e, d);
        return apply_op(op, a, b);
      }
      case Expr::Kind::Pow: {
        const BigNat base = walk(*e.lhs);
        if (base < 1 && e.exponent >= 1)
          throw std::domain_error("zero intermediate value in " + format_expr(e));
        BigNat out = boost::multiprecision::pow(base, static_cast<unsigned>(e.exponent));
        const double d =
            (log2_value(out) - log2_value(base)) * base_scale();
        record(e, d);
        return out;
      }
      case Expr::Kind::Succ: {
        const BigNat child = walk(*e.lhs);
        const BigNat out = child + 1;
        const double d = (log2_value(out) - log2_value(child)) * base_scale();
        record(e, d);
        return out;
      }
    }
    throw std::logic_error("unreachable");
  }

  void record(const Expr& e, double d) {
    report.per_node.emplace_back(format_expr(e), d);
    report.history_delta += d;
    report.node_delta = d;  // last recorded node is the root, by postorder
  }
};

}  // namespace

DeltaReport delta_tree(const ExprPtr& e, const Env& env) {
  if (!e) throw std::invalid_argument("empty expression");
  TreeWalk w{env, {}};
  w.report.value = w.walk(*e);
  if (e->kind == Expr::Kind::Constant || e->kind == Expr::Kind::Variable) {
    w.report.node_delta = 0.0;  // a bare leaf performs no operation
  }
  return std::move(w.report);
}

// --- expression parser ------------------------------------------------------

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos) + " in: " + text);
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (eat('+')) lhs = expr_add(std::move(lhs), parse_product());
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_power();
    while (eat('*')) lhs = expr_mul(std::move(lhs), parse_power());
    return lhs;
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      return expr_pow(std::move(base), std::stoull(text.substr(start, pos - start)));
    }
    return base;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return expr_constant(BigNat(text.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (name == "succ") {
        if (!eat('(')) fail("expected '(' after succ");
        ExprPtr inner = parse_sum();
        if (!eat(')')) fail("expected ')'");
        return expr_succ(std::move(inner));
      }
      return expr_variable(std::move(name));
    }
    fail("unexpected character");
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  ExprParser p{text};
  ExprPtr e = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

// --- polynomials ------------------------------------------------------------

std::uint32_t Polynomial::degree() const {
  std::uint32_t deg = 0;
  for (const Term& t : terms) {
    std::uint32_t total = 0;
    for (std::uint32_t e : t.exponents) total += e;
    deg = std::max(deg, total);
  }
  return deg;
}

BigNat Polynomial::eval(std::span<const BigNat> at) const {
  if (at.size() != arity) throw std::invalid_argument("polynomial arity mismatch");
  BigNat acc = 0;
  for (const Term& t : terms) {
    BigNat m = t.coeff;
    for (std::uint32_t v = 0; v < arity; ++v) {
      for (std::uint32_t e = 0; e < t.exponents[v]; ++e) m *= at[v];
    }
    acc += m;
  }
  return acc;
}

Polynomial parse_polynomial(const std::string& text) {
  // Split into signed terms, then each term into '*'-separated factors.
  Polynomial p;
  struct RawTerm {
    long long coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> vars;  // (index, exponent)
  };
  std::vector<RawTerm> raw;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty polynomial");
  std::uint32_t max_var = 0;
  while (pos < text.size()) {
    long long sign = 1;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    RawTerm term{1, {}};
    bool saw_coeff = false, saw_factor = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (saw_coeff) throw std::invalid_argument("repeated coefficient in term");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        term.coeff = std::stoll(text.substr(start, pos - start));
        saw_coeff = true;
      } else if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("variable must be x<k>");
        const auto index = static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
        if (index == 0) throw std::invalid_argument("variables are numbered from x1");
        std::uint32_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (start == pos) throw std::invalid_argument("expected exponent");
          exp = static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
        }
        term.vars.emplace_back(index - 1, exp);
        max_var = std::max(max_var, index);
      } else {
        break;
      }
      saw_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("malformed polynomial term in: " + text);
    term.coeff *= sign;
    raw.push_back(std::move(term));
    skip_ws();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
      throw std::invalid_argument("expected '+' or '-' between terms");
  }

  p.arity = max_var;
  for (const RawTerm& r : raw) {
    Polynomial::Term t;
    t.coeff = r.coeff;
    t.exponents.assign(p.arity, 0);
    for (const auto& [idx, exp] : r.vars) t.exponents[idx] += exp;
    p.terms.push_back(std::move(t));
  }
  return p;
}

std::string format_polynomial(const Polynomial& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    const long long c = t.coeff;
    if (i == 0) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << std::abs(c);
    for (std::uint32_t v = 0; v < p.arity; ++v) {
      if (t.exponents[v] == 0) continue;
      out << "*x" << (v + 1);
      if (t.exponents[v] > 1) out << "^" << t.exponents[v];
    }
  }
  return out.str();
}

double delta_poly(const Polynomial& p, std::span<const BigNat> inputs) {
  const BigNat value = p.eval(inputs);
  if (value < 1) throw std::domain_error("polynomial value < 1; delta undefined");
  return info(value).bits - tuple_info(inputs).bits;
}

std::vector<BigNat> sample_typical_set(std::uint64_t k, unsigned t, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("sample_typical_set requires k >= 1");
  if (t == 0 || t > 62) throw std::invalid_argument("magnitude exponent must be in [1, 62]");
  SplitMix64 rng(seed);
  std::vector<BigNat> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) out.emplace_back(sample_dyadic_window(rng, t));
  return out;
}

const char* to_string(InfoClass c) {
  switch (c) {
    case InfoClass::Discarding: return "DISCARDING";
    case InfoClass::Conserving: return "CONSERVING";
    case InfoClass::Expanding: return "EXPANDING";
  }
  return "?";
}

Classification classify_polynomial(const Polynomial& p, std::span<const unsigned> t_schedule,
                                   std::uint64_t samples_per_t, std::uint64_t seed,
                                   double slope_threshold) {
  if (t_schedule.size() < 3) throw std::invalid_argument("schedule needs at least 3 points");
  for (std::size_t i = 1; i < t_schedule.size(); ++i)
    if (t_schedule[i - 1] >= t_schedule[i])
      throw std::invalid_argument("schedule must be ascending");
  if (p.arity == 0) throw std::invalid_argument("polynomial has no variables");
  if (samples_per_t == 0) throw std::invalid_argument("samples_per_t must be positive");

  constexpr std::uint64_t kMaxTriesPerSample = 1024;
  Classification result;
  std::vector<BigNat> inputs(p.arity);
  for (const unsigned t : t_schedule) {
    ClassifyRow row;
    row.t = t;
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples_per_t; ++i) {
      SplitMix64 rng(derive_seed(seed, t, i));
      std::uint64_t tries = 0;
      for (;;) {
        if (++tries > kMaxTriesPerSample)
          throw budget_error("rejection rate > 90% at t=" + std::to_string(t));
        for (auto& x : inputs) x = sample_dyadic_window(rng, t);
        const BigNat value = p.eval(inputs);
        if (value >= 1) {
          const double d = info(value).bits - tuple_info(inputs).bits;
          sum += d;
          sum_sq += d * d;
          break;
        }
        ++row.rejected;
      }
    }
    row.samples = samples_per_t;
    if (row.rejected > 9 * samples_per_t)
      throw budget_error("rejection rate > 90% at t=" + std::to_string(t));
    row.mean_delta = sum / static_cast<double>(samples_per_t);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(samples_per_t) - row.mean_delta * row.mean_delta);
    row.stddev = std::sqrt(var);
    result.rows.push_back(row);
  }

  // Least-squares slope of mean delta against t.
  double mean_t = 0.0, mean_d = 0.0;
  for (const auto& r : result.rows) {
    mean_t += r.t;
    mean_d += r.mean_delta;
  }
  mean_t /= static_cast<double>(result.rows.size());
  mean_d /= static_cast<double>(result.rows.size());
  double num = 0.0, den = 0.0;
  for (const auto& r : result.rows) {
    num += (r.t - mean_t) * (r.mean_delta - mean_d);
    den += (r.t - mean_t) * (r.t - mean_t);
  }
  result.slope = num / den;
  result.cls = result.slope < -slope_threshold  ? InfoClass::Discarding
               : result.slope > slope_threshold ? InfoClass::Expanding
                                                : InfoClass::Conserving;
  return result;
}

void write_classification_csv(const Classification& c, std::ostream& out) {
  out << "t,mean_delta,stddev,samples,rejected\n";
  for (const auto& r : c.rows) {
    out << r.t << ',' << format_double(r.mean_delta) << ',' << format_double(r.stddev) << ','
        << r.samples << ',' << r.rejected << '\n';
  }
}

DioCount diophantine_density(const Polynomial& p, std::uint64_t bound, bool exclude_trivial,
                             std::uint64_t budget, std::size_t witness_limit) {
  if (p.arity == 0 || p.arity > 3)
    throw std::invalid_argument("exhaustive mode supports arity 1..3");
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < p.arity; ++i) {
    if (total > budget / bound) throw budget_error("bound^arity exceeds work budget");
    total *= bound;
  }

  DioCount out;
  out.total = total;
  std::vector<std::uint64_t> tuple(p.arity, 1);
  std::vector<BigNat> at(p.arity);
  for (;;) {
    bool trivial = false;
    if (exclude_trivial) {
      for (std::uint32_t i = 0; i < p.arity && !trivial; ++i) {
        if (tuple[i] == 0) trivial = true;
        for (std::uint32_t j = i + 1; j < p.arity; ++j)
          if (tuple[i] == tuple[j]) trivial = true;
      }
    }
    if (!trivial) {
      for (std::uint32_t i = 0; i < p.arity; ++i) at[i] = tuple[i];
      if (p.eval(at) == 0) {
        ++out.solutions;
        if (out.witnesses.size() < witness_limit) out.witnesses.push_back(tuple);
      }
    }
    // odometer increment
    std::uint32_t pos = 0;
    while (pos < p.arity && ++tuple[pos] > bound) {
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == p.arity) break;
  }
  out.density = static_cast<double>(out.solutions) / static_cast<double>(total);
  return out;
}

double nonassoc_gap(const BigNat& x, const BigNat& y, const BigNat& z) {
  if (x < 1 || y < 1 || z < 1) throw std::domain_error("nonassoc_gap requires operands >= 1");
  const double gap = log2_value(x) + log2_value(y + z) - log2_value(x + y) - log2_value(z);
  return std::abs(gap) * base_scale();
}

}  // namespace infoflow
