#include "infoflow/finite_set.hpp"

#include <algorithm>
#include <sstream>

namespace infoflow {

FiniteSet::FiniteSet(std::vector<BigNat> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0) throw std::invalid_argument("set elements must be naturals");
    if (i > 0 && elements_[i - 1] >= elements_[i])
      throw std::invalid_argument("set elements must be strictly increasing");
  }
}

FiniteSet FiniteSet::from_unsorted(std::vector<BigNat> elements) {
  std::sort(elements.begin(), elements.end());
  return FiniteSet(std::move(elements));
}

BigNat set_sum(const FiniteSet& s) {
  BigNat total = 0;
  for (const BigNat& e : s.elements()) total += e;
  return total;
}

BigNat set_product(const FiniteSet& s) {
  BigNat total = 1;
  for (const BigNat& e : s.elements()) total *= e;
  return total;
}

std::string format_set(const FiniteSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const BigNat& e : s.elements()) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

FiniteSet parse_set(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("set literal must be brace-delimited: " + text);
  const std::string body = t.substr(1, t.size() - 2);
  std::vector<BigNat> elems;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const std::size_t comma = body.find(',', pos);
      const std::string item =
          body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      elems.push_back(parse_nat(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return FiniteSet(std::move(elems));  // enforces strict ascending order
}

}  // namespace infoflow
