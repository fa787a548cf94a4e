#include "infoflow/aleph.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace infoflow {

AlephTerm aleph_add(const AlephTerm& a, const AlephTerm& b) {
  if (a.degree == 0 && b.degree == 0) return aleph_finite(a.finite + b.finite);
  return a.degree >= b.degree ? aleph(a.degree) : aleph(b.degree);
}

AlephTerm aleph_sub(const AlephTerm& a, const AlephTerm& b) {
  if (a.degree == 0 && b.degree == 0) return aleph_finite(a.finite - b.finite);
  return a.degree >= b.degree ? aleph(a.degree) : aleph(b.degree);
}

AlephTerm aleph_mul(const AlephTerm& a, const AlephTerm& b) {
  if (a.degree == 0 && b.degree == 0) return aleph_finite(a.finite * b.finite);
  return aleph(a.degree + b.degree);  // coefficients are dropped at degree >= 1
}

AlephTerm aleph_div(const AlephTerm& a, const AlephTerm& b) {
  if (b.degree == 0) {
    if (b.finite == 0.0) throw std::domain_error("division by finite zero");
    if (a.degree == 0) return aleph_finite(a.finite / b.finite);
    return aleph(a.degree);
  }
  if (a.degree > b.degree) return aleph(a.degree - b.degree);
  if (a.degree == b.degree) return aleph_finite(1.0);
  return aleph_finite(0.0);  // negative degree vanishes in the limit
}

AlephTerm aleph_pow(const AlephTerm& a, std::uint32_t e) {
  if (a.degree == 0) return aleph_finite(std::pow(a.finite, static_cast<double>(e)));
  if (e == 0) return aleph_finite(1.0);
  return aleph(a.degree * e);
}

std::string format_aleph(const AlephTerm& t) {
  if (t.degree == 0) {
    std::ostringstream out;
    out << t.finite;
    return out.str();
  }
  if (t.degree == 1) return "aleph_-1";
  return "(aleph_-1)^" + std::to_string(t.degree);
}

namespace {

struct AlephParser {
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

  AlephTerm parse_sum() {
    AlephTerm lhs = parse_product();
    for (;;) {
      if (eat('+'))
        lhs = aleph_add(lhs, parse_product());
      else if (eat('-'))
        lhs = aleph_sub(lhs, parse_product());
      else
        return lhs;
    }
  }

  AlephTerm parse_product() {
    AlephTerm lhs = parse_power();
    for (;;) {
      if (eat('*'))
        lhs = aleph_mul(lhs, parse_power());
      else if (eat('/'))
        lhs = aleph_div(lhs, parse_power());
      else
        return lhs;
    }
  }

  AlephTerm parse_power() {
    AlephTerm base = parse_atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      return aleph_pow(base, static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start))));
    }
    return base;
  }

  AlephTerm parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    if (eat('(')) {
      AlephTerm inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
        ++pos;
      return aleph_finite(std::stod(text.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '-')) {
        // allow the literal name "aleph_-1"
        ++pos;
      }
      const std::string name = text.substr(start, pos - start);
      if (name == "a" || name == "aleph" || name == "aleph_-1") return aleph();
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

AlephTerm parse_aleph_expr(const std::string& text) {
  AlephParser p{text};
  AlephTerm t = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

}  // namespace infoflow
