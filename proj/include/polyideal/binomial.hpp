// Variables, monomials and pure-difference binomials over the vertex ring and
// the interval/hole ring.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grid.hpp"

namespace polyideal {

struct VariableId {
  enum class Kind : std::uint8_t { vertex, vside, hside, hole };

  Kind kind = Kind::vertex;
  Point point{};  // vertex variables only
  int index = 0;  // vside / hside only

  static constexpr VariableId vertex(Point p) { return {Kind::vertex, p, 0}; }
  static constexpr VariableId vside(int i) { return {Kind::vside, {}, i}; }
  static constexpr VariableId hside(int j) { return {Kind::hside, {}, j}; }
  static constexpr VariableId hole() { return {Kind::hole, {}, 0}; }

  friend constexpr bool operator==(const VariableId&, const VariableId&) = default;
  friend constexpr std::strong_ordering operator<=>(const VariableId& a, const VariableId& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.point <=> b.point; c != 0) return c;
    return a.index <=> b.index;
  }
};

namespace detail {
inline std::string coordinate_token(int v) {
  return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
}
}  // namespace detail

/// Identifier usable in computer-algebra input: x_i_j, v_i, h_j, w (negatives as m<k>).
inline std::string name(const VariableId& v) {
  switch (v.kind) {
    case VariableId::Kind::vertex:
      return "x_" + detail::coordinate_token(v.point.x) + "_" + detail::coordinate_token(v.point.y);
    case VariableId::Kind::vside:
      return "v_" + std::to_string(v.index);
    case VariableId::Kind::hside:
      return "h_" + std::to_string(v.index);
    case VariableId::Kind::hole:
      return "w";
  }
  return "?";
}

// Sparse exponent map; terms sorted by variable, no zero exponents.
class Monomial {
 public:
  using Term = std::pair<VariableId, unsigned>;

  Monomial() = default;
  Monomial(std::initializer_list<VariableId> vars) {
    for (const auto& v : vars) multiply(v);
  }
  static Monomial of_points(std::initializer_list<Point> pts) {
    Monomial m;
    for (Point p : pts) m.multiply(VariableId::vertex(p));
    return m;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
  }

  unsigned exponent(const VariableId& v) const {
    auto it = find(v);
    return it != terms_.end() && it->first == v ? it->second : 0;
  }

  Monomial& multiply(const VariableId& v, unsigned e = 1) {
    if (e == 0) return *this;
    auto it = find(v);
    if (it != terms_.end() && it->first == v)
      it->second += e;
    else
      terms_.insert(it, {v, e});
    return *this;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.terms_) out.multiply(v, e);
    return out;
  }

  bool divides(const Monomial& other) const {
    for (const auto& [v, e] : terms_)
      if (other.exponent(v) < e) return false;
    return true;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [v, e] : a.terms_)
      if (unsigned f = b.exponent(v); f > 0) out.terms_.push_back({v, std::min(e, f)});
    return out;
  }

  /// a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [v, e] : a.terms_) {
      unsigned f = b.exponent(v);
      if (f > e) throw Error("monomial division is not exact");
      if (e > f) out.terms_.push_back({v, e - f});
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.terms_ <=> b.terms_; }

 private:
  std::vector<Term>::iterator find(const VariableId& v) {
    return std::lower_bound(terms_.begin(), terms_.end(), v,
                            [](const Term& t, const VariableId& x) { return t.first < x; });
  }
  std::vector<Term>::const_iterator find(const VariableId& v) const {
    return std::lower_bound(terms_.begin(), terms_.end(), v,
                            [](const Term& t, const VariableId& x) { return t.first < x; });
  }

  std::vector<Term> terms_;
};

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.terms()) {
    if (!out.empty()) out += "*";
    out += name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Degree reverse lexicographic order. Variables are ranked by VariableId:
// the smallest id is the largest variable.
struct TermOrder {
  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Walk both term lists from the smallest variable upwards.
    auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
    while (ia != a.terms().rend() || ib != b.terms().rend()) {
      if (ib == b.terms().rend() || (ia != a.terms().rend() && ia->first > ib->first)) {
        return -1;  // a has positive exponent on a smaller variable
      }
      if (ia == a.terms().rend() || ib->first > ia->first) return 1;
      if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
      ++ia;
      ++ib;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// plus - minus with unit coefficients.
struct Binomial {
  Monomial plus;
  Monomial minus;

  bool is_zero() const { return plus == minus; }
  unsigned degree() const { return std::max(plus.degree(), minus.degree()); }
  bool is_homogeneous() const { return plus.degree() == minus.degree(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial& a, const Binomial& b) {
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }
};

/// Same binomial, leading term first.
inline Binomial oriented(const Binomial& b, const TermOrder& ord = {}) {
  if (ord.compare(b.plus, b.minus) >= 0) return b;
  return {b.minus, b.plus};
}

/// Equality of the generated principal ideals (b == c or b == -c).
inline bool same_up_to_sign(const Binomial& b, const Binomial& c) {
  return (b.plus == c.plus && b.minus == c.minus) || (b.plus == c.minus && b.minus == c.plus);
}

inline std::string to_string(const Binomial& b) {
  return to_string(b.plus) + " - " + to_string(b.minus);
}

}  // namespace polyideal
