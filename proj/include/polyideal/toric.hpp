// Inner 2-minors, the toric maps into the interval ring, and a degree-bounded
// comparison between the minor ideal and the toric kernel.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "binomial.hpp"
#include "grid.hpp"
#include "groebner.hpp"
#include "interval_graph.hpp"

namespace polyideal {

/// x_a x_b - x_c x_d for every inner interval, [a, b] diagonal and [c, d] anti-diagonal.
inline std::vector<Binomial> inner_2_minors(const CellCollection& p) {
  std::vector<Binomial> out;
  for (const auto& i : inner_intervals(p)) {
    auto [c, d] = i.anti_diagonal_corners();
    out.push_back({Monomial::of_points({i.lo, i.hi}), Monomial::of_points({c, d})});
  }
  return out;
}

inline std::vector<VariableId> vertex_variables(const CellCollection& p) {
  std::vector<VariableId> out;
  out.reserve(p.vertex_set().size());
  for (Point q : p.vertex_set()) out.push_back(VariableId::vertex(q));
  return out;
}

// Images of the vertex variables in the ring of interval and hole variables.
struct MonomialMap {
  std::map<Point, Monomial> images;

  const Monomial& image(Point p) const {
    auto it = images.find(p);
    if (it == images.end()) throw Error("unknown variable x at " + to_string(p));
    return it->second;
  }
  std::vector<Point> marked() const {
    std::vector<Point> out;
    for (const auto& [p, m] : images)
      if (m.exponent(VariableId::hole()) > 0) out.push_back(p);
    return out;
  }
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// a -> v_i h_j w^k with k = 1 exactly for marked vertices.
inline MonomialMap hole_toric_map(const CellCollection& p, const std::vector<Point>& marked) {
  for (Point q : marked)
    if (!p.has_vertex(q)) throw Error("marked vertex not in collection: " + to_string(q));
  const auto g = build_graph(p);
  MonomialMap m;
  for (Point q : p.vertex_set()) {
    int i = g.interval_containing(q, Orientation::vertical);
    int j = g.interval_containing(q, Orientation::horizontal);
    if (i < 0 || j < 0) throw Error("dangling vertex " + to_string(q));
    Monomial img{VariableId::vside(i), VariableId::hside(j)};
    if (std::find(marked.begin(), marked.end(), q) != marked.end())
      img.multiply(VariableId::hole());
    m.images.emplace(q, std::move(img));
  }
  return m;
}

inline MonomialMap edge_ring_map(const CellCollection& p) { return hole_toric_map(p, {}); }

inline Monomial apply_map(const MonomialMap& m, const Monomial& mono) {
  Monomial out;
  for (const auto& [v, e] : mono.terms()) {
    if (v.kind != VariableId::Kind::vertex) throw Error("unknown variable " + name(v));
    for (const auto& [w, f] : m.image(v.point).terms()) out.multiply(w, e * f);
  }
  return out;
}

inline bool in_kernel(const MonomialMap& m, const Binomial& b) {
  return apply_map(m, b.plus) == apply_map(m, b.minus);
}

inline constexpr std::size_t kDefaultMonomialCap = 5'000'000;

namespace detail {

inline std::size_t monomial_count(std::size_t n, unsigned d) {
  // C(n + d - 1, d), saturating.
  long double c = 1;
  for (unsigned k = 1; k <= d; ++k) c = c * static_cast<long double>(n + k - 1) / k;
  return c > 1e18L ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(c + 0.5L);
}

// Calls f(exponent multiset as variable indices) for each monomial of degree d.
template <class F>
void for_each_monomial(std::size_t n, unsigned d, F&& f) {
  std::vector<std::size_t> idx(d, 0);
  if (d == 0) {
    f(idx);
    return;
  }
  if (n == 0) return;
  for (;;) {
    f(idx);
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == n - 1) --k;
    if (k == 0) return;
    std::size_t next = idx[k - 1] + 1;
    for (std::size_t t = k - 1; t < d; ++t) idx[t] = next;
  }
}

}  // namespace detail

/// Coprime binomials u - v of degree 1..d with equal images, leading term first, sorted.
inline std::vector<Binomial> kernel_binomials_up_to_degree(
    const MonomialMap& m, unsigned d, std::size_t cap = kDefaultMonomialCap) {
  if (d < 1) throw Error("degree bound must be positive");
  std::vector<Point> pts;
  for (const auto& [p, img] : m.images) pts.push_back(p);
  std::size_t total = 0;
  for (unsigned k = 1; k <= d; ++k) {
    total += detail::monomial_count(pts.size(), k);
    if (total > cap) throw Error("degree bound too large");
  }
  std::set<Binomial> out;
  TermOrder ord;
  for (unsigned k = 1; k <= d; ++k) {
    std::map<Monomial, std::vector<Monomial>> buckets;
    detail::for_each_monomial(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      Monomial u, img;
      for (std::size_t i : idx) {
        u.multiply(VariableId::vertex(pts[i]));
        for (const auto& [w, f] : m.images.at(pts[i]).terms()) img.multiply(w, f);
      }
      buckets[img].push_back(std::move(u));
    });
    for (const auto& [img, monos] : buckets)
      for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = a + 1; b < monos.size(); ++b)
          if (gcd(monos[a], monos[b]).is_one())
            out.insert(oriented(Binomial{monos[a], monos[b]}, ord));
  }
  return {out.begin(), out.end()};
}

struct ToricEqualityReport {
  unsigned degree = 0;
  // Inner 2-minors mapped to zero.
  bool minors_in_kernel = true;
  std::size_t minors_checked = 0;
  std::optional<Binomial> minor_witness;
  // Kernel elements of degree <= degree lying in the minor ideal.
  bool kernel_in_ideal = true;
  std::size_t basis_size = 0;
  std::size_t standard_monomials = 0;
  std::optional<Binomial> kernel_witness;

  bool passed() const { return minors_in_kernel && kernel_in_ideal; }
};

inline std::string to_string(const ToricEqualityReport& r) {
  std::string s = "degree " + std::to_string(r.degree) + ": ";
  s += r.passed() ? "equal up to degree " + std::to_string(r.degree) : "NOT equal";
  s += "\n  minors in kernel: " + std::string(r.minors_in_kernel ? "yes" : "no") + " (" +
       std::to_string(r.minors_checked) + " checked)";
  if (r.minor_witness) s += "\n    witness: " + to_string(*r.minor_witness);
  s += "\n  kernel in ideal: " + std::string(r.kernel_in_ideal ? "yes" : "no") + " (basis " +
       std::to_string(r.basis_size) + ", standard monomials " +
       std::to_string(r.standard_monomials) + ")";
  if (r.kernel_witness) s += "\n    witness: " + to_string(*r.kernel_witness);
  return s;
}

/// Compares I_P with ker(m) in degrees <= d. Given I_P ⊆ ker, the kernel part of
/// degree <= d lies in I_P exactly when distinct standard monomials of degree <= d
/// (with respect to a d-truncated Gröbner basis of I_P) have distinct images.
inline ToricEqualityReport toric_equality_report(const CellCollection& p, const MonomialMap& m,
                                                 unsigned d,
                                                 std::size_t cap = kDefaultMonomialCap) {
  if (d < 2) throw Error("degree bound must be at least 2");
  ToricEqualityReport r;
  r.degree = d;
  const auto minors = inner_2_minors(p);
  for (const auto& f : minors) {
    ++r.minors_checked;
    if (!in_kernel(m, f)) {
      r.minors_in_kernel = false;
      if (!r.minor_witness) r.minor_witness = f;
    }
  }

  const auto vars = vertex_variables(p);
  BinomialIdeal ideal(minors, {}, d, vars);
  r.basis_size = ideal.rules().size();
  const DenseRing& ring = ideal.ring();
  const std::size_t n = ring.size();

  if (!r.minors_in_kernel) {
    // The standard-monomial shortcut needs I_P ⊆ ker; compare bucket by bucket instead.
    std::vector<Point> pts;
    for (const auto& v : ring.variables()) pts.push_back(v.point);
    std::size_t total = 0;
    for (unsigned k = 1; k <= d; ++k) {
      total += detail::monomial_count(pts.size(), k);
      if (total > cap) throw Error("degree bound too large");
    }
    for (unsigned k = 1; k <= d && r.kernel_in_ideal; ++k) {
      std::map<Monomial, std::pair<Monomial, Monomial>> first;  // image -> (monomial, NF)
      detail::for_each_monomial(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (!r.kernel_in_ideal) return;
        Monomial u;
        for (std::size_t i : idx) u.multiply(VariableId::vertex(pts[i]));
        Monomial nf = ideal.normal_form(u);
        auto [it, fresh] = first.emplace(apply_map(m, u), std::pair{u, nf});
        if (fresh || it->second.second == nf) return;
        r.kernel_in_ideal = false;
        Monomial g = gcd(it->second.first, u);
        r.kernel_witness = oriented(Binomial{quotient(it->second.first, g), quotient(u, g)});
      });
    }
    return r;
  }

  // Image coordinates: one slot per interval or hole variable.
  std::map<VariableId, std::size_t> slot;
  for (const auto& [pt, img] : m.images)
    for (const auto& [w, e] : img.terms()) slot.emplace(w, 0);
  {
    std::size_t k = 0;
    for (auto& [w, s] : slot) s = k++;
  }
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> image_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = ring.variables()[i];
    if (v.kind != VariableId::Kind::vertex) throw Error("unknown variable " + name(v));
    for (const auto& [w, e] : m.image(v.point).terms()) image_of[i].push_back({slot.at(w), e});
  }

  // Depth-first walk over standard monomials; the standard set is closed under division.
  std::unordered_map<std::string, DenseMonomial> seen;
  std::string image(slot.size(), '\0');
  DenseMonomial cur;
  bool cap_hit = false;
  auto is_standard = [&](const DenseMonomial& mono) {
    for (const auto& rule : ideal.rules())
      if (ring.divides(rule.lead, mono)) return false;
    return true;
  };
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (!r.kernel_in_ideal || cap_hit) return;
    if (cur.degree > 0) {
      ++r.standard_monomials;
      if (r.standard_monomials > cap) {
        cap_hit = true;
        return;
      }
      auto [it, fresh] = seen.emplace(image, cur);
      if (!fresh) {
        r.kernel_in_ideal = false;
        Monomial a = ring.sparse(it->second), b = ring.sparse(cur);
        Monomial g = gcd(a, b);
        r.kernel_witness = oriented(Binomial{quotient(a, g), quotient(b, g)});
        return;
      }
    }
    if (cur.degree == d) return;
    for (std::size_t i = from; i < n; ++i) {
      DenseMonomial next = cur;
      next.add(i, 1);
      if (!is_standard(next)) continue;
      std::swap(cur, next);
      for (auto [s, e] : image_of[i]) image[s] = static_cast<char>(image[s] + e);
      self(self, i);
      for (auto [s, e] : image_of[i]) image[s] = static_cast<char>(image[s] - e);
      std::swap(cur, next);
      if (!r.kernel_in_ideal || cap_hit) return;
    }
  };
  visit(visit, 0);
  if (cap_hit) throw Error("degree bound too large");
  return r;
}

}  // namespace polyideal
