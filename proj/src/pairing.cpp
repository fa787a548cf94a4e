#include "infoflow/pairing.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace infoflow {

BigNat cantor_pair(const BigNat& x, const BigNat& y) {
  if (x < 0 || y < 0) throw std::invalid_argument("cantor_pair requires naturals");
  const BigNat d = x + y;
  return d * (d + 1) / 2 + y;
}

Pair cantor_unpair(const BigNat& n) {
  if (n < 0) throw std::invalid_argument("cantor_unpair requires a natural");
  // Largest w with w(w+1)/2 <= n, via r = isqrt(8n+1).
  BigNat w = (isqrt(8 * n + 1) - 1) / 2;
  BigNat t = w * (w + 1) / 2;
  if (t > n) {  // guard against isqrt landing one too high is unnecessary, but cheap
    --w;
    t = w * (w + 1) / 2;
  }
  BigNat y = n - t;
  BigNat x = w - y;
  return {std::move(x), std::move(y)};
}

BigNat cantor_pair_k(std::span<const BigNat> xs) {
  if (xs.empty()) throw std::invalid_argument("cantor_pair_k requires arity >= 1");
  BigNat acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = cantor_pair(xs[i], acc);
  return acc;
}

void DirectedGraph::validate() const {
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& [a, b] = links[i];
    if (a >= node_count || b >= node_count)
      throw std::invalid_argument("link endpoint out of range");
    if (i > 0 && links[i - 1] == links[i]) throw std::invalid_argument("duplicate link");
  }
}

FiniteSet graph_encode(const DirectedGraph& g) {
  g.validate();
  std::vector<BigNat> codes;
  codes.reserve(g.links.size());
  for (const auto& [a, b] : g.links) codes.push_back(cantor_pair(BigNat(a), BigNat(b)));
  return FiniteSet::from_unsorted(std::move(codes));
}

DirectedGraph graph_decode(const FiniteSet& s, std::uint64_t node_count) {
  DirectedGraph g;
  g.node_count = node_count;
  g.links.reserve(s.size());
  for (const BigNat& code : s.elements()) {
    Pair p = cantor_unpair(code);
    if (p.x >= node_count || p.y >= node_count)
      throw std::invalid_argument("decoded link endpoint >= node_count");
    g.links.emplace_back(to_u64(p.x), to_u64(p.y));
  }
  std::sort(g.links.begin(), g.links.end());
  return g;
}

std::string format_graph(const DirectedGraph& g) {
  std::ostringstream out;
  out << "n " << g.node_count << '\n';
  for (const auto& [a, b] : g.links) out << a << ' ' << b << '\n';
  return out.str();
}

DirectedGraph parse_graph(std::istream& in) {
  DirectedGraph g;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      ls >> tag >> g.node_count;
      if (tag != "n" || ls.fail()) throw std::invalid_argument("graph header must be 'n <count>'");
      have_header = true;
      continue;
    }
    std::uint64_t a = 0, b = 0;
    ls >> a >> b;
    if (ls.fail()) throw std::invalid_argument("malformed link line: " + line);
    g.links.emplace_back(a, b);
  }
  if (!have_header) throw std::invalid_argument("empty graph input");
  std::sort(g.links.begin(), g.links.end());
  g.validate();
  return g;
}

}  // namespace infoflow
