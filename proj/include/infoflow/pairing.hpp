#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "infoflow/bignat.hpp"
#include "infoflow/finite_set.hpp"

namespace infoflow {

struct Pair {
  BigNat x;
  BigNat y;
  bool operator==(const Pair&) const = default;
};

// Cantor pairing (x+y)(x+y+1)/2 + y and its exact inverse. The inverse uses
// an integer triangular root, never floating point.
BigNat cantor_pair(const BigNat& x, const BigNat& y);
Pair cantor_unpair(const BigNat& n);

// k-ary extension as a right fold: pair(x1, pair(x2, ... )). Identity at k=1.
BigNat cantor_pair_k(std::span<const BigNat> xs);

// Directed graph on nodes {0, ..., node_count-1} with a duplicate-free link
// set. Links are kept sorted.
struct DirectedGraph {
  std::uint64_t node_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> links;

  void validate() const;  // throws on out-of-range or duplicate links
  bool operator==(const DirectedGraph&) const = default;
};

// { cantor_pair(a, b) : (a, b) in links }, ascending. node_count is not
// encoded; isolated trailing nodes are not recoverable from the codes.
FiniteSet graph_encode(const DirectedGraph& g);
DirectedGraph graph_decode(const FiniteSet& s, std::uint64_t node_count);

// Text format: first line "n <node_count>", then one "a b" link per line.
std::string format_graph(const DirectedGraph& g);
DirectedGraph parse_graph(std::istream& in);

}  // namespace infoflow
