// Buchberger's algorithm for ideals generated by pure-difference binomials.
//
// S-binomials and reductions of pure differences are again pure differences,
// so no coefficient arithmetic is needed: a basis element is a rewrite rule
// lead -> tail, and the normal form of a binomial u - v is NF(u) - NF(v).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "binomial.hpp"

namespace polyideal {

inline constexpr std::size_t kMaxVariables = 128;

// Dense exponent vector over a fixed variable list. Index 0 is the largest
// variable. The bit mask records the support for quick divisibility rejects.
struct DenseMonomial {
  std::array<std::uint8_t, kMaxVariables> exp{};
  std::array<std::uint64_t, 2> mask{};
  unsigned degree = 0;

  void add(std::size_t i, unsigned e) {
    if (exp[i] + e > std::numeric_limits<std::uint8_t>::max()) throw Error("exponent overflow");
    exp[i] = static_cast<std::uint8_t>(exp[i] + e);
    degree += e;
    if (exp[i] > 0) mask[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void refresh_mask(std::size_t n) {
    mask = {};
    for (std::size_t i = 0; i < n; ++i)
      if (exp[i] > 0) mask[i / 64] |= std::uint64_t{1} << (i % 64);
  }
};

class DenseRing {
 public:
  explicit DenseRing(std::vector<VariableId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (vars_.size() > kMaxVariables) throw Error("too many variables for the binomial engine");
  }

  std::size_t size() const { return vars_.size(); }
  const std::vector<VariableId>& variables() const { return vars_; }

  std::size_t index_of(const VariableId& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) throw Error("unknown variable " + name(v));
    return static_cast<std::size_t>(it - vars_.begin());
  }

  DenseMonomial dense(const Monomial& m) const {
    DenseMonomial d;
    for (const auto& [v, e] : m.terms()) d.add(index_of(v), e);
    return d;
  }

  Monomial sparse(const DenseMonomial& d) const {
    Monomial m;
    for (std::size_t i = 0; i < size(); ++i)
      if (d.exp[i] > 0) m.multiply(vars_[i], d.exp[i]);
    return m;
  }

  bool divides(const DenseMonomial& a, const DenseMonomial& b) const {
    if ((a.mask[0] & ~b.mask[0]) || (a.mask[1] & ~b.mask[1]) || a.degree > b.degree) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (a.exp[i] > b.exp[i]) return false;
    return true;
  }

  DenseMonomial lcm(const DenseMonomial& a, const DenseMonomial& b) const {
    DenseMonomial out;
    for (std::size_t i = 0; i < size(); ++i) {
      out.exp[i] = std::max(a.exp[i], b.exp[i]);
      out.degree += out.exp[i];
    }
    out.refresh_mask(size());
    return out;
  }

  bool coprime(const DenseMonomial& a, const DenseMonomial& b) const {
    return (a.mask[0] & b.mask[0]) == 0 && (a.mask[1] & b.mask[1]) == 0;
  }

  /// m / a * b, requires a | m.
  DenseMonomial rewrite(const DenseMonomial& m, const DenseMonomial& a,
                        const DenseMonomial& b) const {
    DenseMonomial out;
    for (std::size_t i = 0; i < size(); ++i) {
      unsigned e = static_cast<unsigned>(m.exp[i]) - a.exp[i] + b.exp[i];
      if (e > std::numeric_limits<std::uint8_t>::max()) throw Error("exponent overflow");
      out.exp[i] = static_cast<std::uint8_t>(e);
      out.degree += e;
    }
    out.refresh_mask(size());
    return out;
  }

  bool equal(const DenseMonomial& a, const DenseMonomial& b) const {
    if (a.degree != b.degree || a.mask != b.mask) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (a.exp[i] != b.exp[i]) return false;
    return true;
  }

  /// Degree reverse lexicographic comparison.
  int compare(const DenseMonomial& a, const DenseMonomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (std::size_t i = size(); i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

 private:
  std::vector<VariableId> vars_;
};

namespace detail {

inline std::vector<VariableId> variables_of(const std::vector<Binomial>& gens) {
  std::vector<VariableId> vars;
  for (const auto& g : gens) {
    for (const auto& t : g.plus.terms()) vars.push_back(t.first);
    for (const auto& t : g.minus.terms()) vars.push_back(t.first);
  }
  return vars;
}

}  // namespace detail

// A Gröbner basis held as rewrite rules, with incremental completion.
class BinomialIdeal {
 public:
  struct Rule {
    DenseMonomial lead;
    DenseMonomial tail;
  };

  struct Stats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t pairs_skipped_chain = 0;
    std::size_t pairs_skipped_degree = 0;
    std::size_t reductions_to_zero = 0;
  };

  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

  /// Computes a reduced Gröbner basis. With `max_degree` set, S-pairs whose lcm
  /// exceeds it are skipped; for homogeneous generators the result then decides
  /// membership of every binomial of degree at most `max_degree`.
  BinomialIdeal(const std::vector<Binomial>& gens, const TermOrder& /*ord*/ = {},
                unsigned max_degree = kUnbounded, std::vector<VariableId> extra_vars = {})
      : ring_(merge(detail::variables_of(gens), std::move(extra_vars))), max_degree_(max_degree) {
    bool homogeneous = std::all_of(gens.begin(), gens.end(),
                                   [](const Binomial& b) { return b.is_homogeneous(); });
    if (!homogeneous) max_degree_ = kUnbounded;
    for (const auto& g : gens) insert(ring_.dense(g.plus), ring_.dense(g.minus));
    complete();
    interreduce();
  }

  const DenseRing& ring() const { return ring_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Stats& stats() const { return stats_; }
  unsigned degree_bound() const { return max_degree_; }
  bool truncated() const { return max_degree_ != kUnbounded; }

  DenseMonomial reduce(DenseMonomial m) const {
    for (;;) {
      const Rule* hit = nullptr;
      for (const auto& r : rules_)
        if (ring_.divides(r.lead, m)) {
          hit = &r;
          break;
        }
      if (!hit) return m;
      m = ring_.rewrite(m, hit->lead, hit->tail);
    }
  }

  bool knows(const VariableId& v) const {
    return std::binary_search(ring_.variables().begin(), ring_.variables().end(), v);
  }

  /// Monomial normal form. Variables outside the ring are left untouched.
  Monomial normal_form(const Monomial& m) const {
    Monomial inside, outside;
    for (const auto& [v, e] : m.terms()) (knows(v) ? inside : outside).multiply(v, e);
    return ring_.sparse(reduce(ring_.dense(inside))) * outside;
  }

  /// Normal form of a binomial; nullopt means zero.
  std::optional<Binomial> normal_form(const Binomial& f, const TermOrder& ord = {}) const {
    if (f.is_zero()) return std::nullopt;
    Binomial r{normal_form(f.plus), normal_form(f.minus)};
    if (r.is_zero()) return std::nullopt;
    return oriented(r, ord);
  }

  bool contains(const Binomial& f) const { return !normal_form(f).has_value(); }

  std::vector<Binomial> basis() const {
    std::vector<Binomial> out;
    out.reserve(rules_.size());
    for (const auto& r : rules_) out.push_back({ring_.sparse(r.lead), ring_.sparse(r.tail)});
    std::sort(out.begin(), out.end());
    return out;
  }

  /// S-binomial of two rules, reduced; nullopt when it reduces to zero.
  std::optional<Binomial> reduced_s_binomial(std::size_t i, std::size_t j) const {
    const auto& a = rules_[i];
    const auto& b = rules_[j];
    DenseMonomial l = ring_.lcm(a.lead, b.lead);
    DenseMonomial left = reduce(ring_.rewrite(l, a.lead, a.tail));
    DenseMonomial right = reduce(ring_.rewrite(l, b.lead, b.tail));
    if (ring_.equal(left, right)) return std::nullopt;
    return oriented(Binomial{ring_.sparse(left), ring_.sparse(right)});
  }

 private:
  static std::vector<VariableId> merge(std::vector<VariableId> a, std::vector<VariableId> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Adds u - v after reducing both sides; returns false when it vanishes.
  bool insert(DenseMonomial u, DenseMonomial v) {
    u = reduce(u);
    v = reduce(v);
    int c = ring_.compare(u, v);
    if (c == 0) return false;
    if (c < 0) std::swap(u, v);
    rules_.push_back({u, v});
    const std::size_t k = rules_.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      DenseMonomial l = ring_.lcm(rules_[i].lead, rules_[k].lead);
      pending_.insert({l.degree, i, k});
    }
    return true;
  }

  bool is_pending(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    DenseMonomial l = ring_.lcm(rules_[i].lead, rules_[j].lead);
    return pending_.count({l.degree, i, j}) > 0;
  }

  // Gebauer-Moeller style chain test: some k whose lead divides lcm(i, j) and
  // whose pairs with i and j are already handled.
  bool chain_redundant(std::size_t i, std::size_t j, const DenseMonomial& l) const {
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      if (k == i || k == j) continue;
      if (!ring_.divides(rules_[k].lead, l)) continue;
      if (!is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  void complete() {
    while (!pending_.empty()) {
      auto [deg, i, j] = *pending_.begin();
      pending_.erase(pending_.begin());
      ++stats_.pairs_considered;
      if (deg > max_degree_) {
        ++stats_.pairs_skipped_degree;
        continue;
      }
      const DenseMonomial lead_i = rules_[i].lead;
      const DenseMonomial lead_j = rules_[j].lead;
      if (ring_.coprime(lead_i, lead_j)) {
        ++stats_.pairs_skipped_coprime;
        continue;
      }
      DenseMonomial l = ring_.lcm(lead_i, lead_j);
      if (chain_redundant(i, j, l)) {
        ++stats_.pairs_skipped_chain;
        continue;
      }
      DenseMonomial left = ring_.rewrite(l, lead_i, rules_[i].tail);
      DenseMonomial right = ring_.rewrite(l, lead_j, rules_[j].tail);
      if (!insert(left, right)) ++stats_.reductions_to_zero;
    }
  }

  void interreduce() {
    // Drop rules whose lead is a multiple of another lead (keep the first of equal leads).
    std::vector<Rule> kept;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < rules_.size() && !redundant; ++j) {
        if (i == j || !ring_.divides(rules_[j].lead, rules_[i].lead)) continue;
        redundant = !ring_.equal(rules_[j].lead, rules_[i].lead) || j < i;
      }
      if (!redundant) kept.push_back(rules_[i]);
    }
    rules_ = std::move(kept);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      Rule self = rules_[i];
      rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
      self.tail = reduce(self.tail);
      rules_.insert(rules_.begin() + static_cast<std::ptrdiff_t>(i), self);
    }
    std::sort(rules_.begin(), rules_.end(), [this](const Rule& a, const Rule& b) {
      return ring_.compare(a.lead, b.lead) < 0;
    });
  }

  DenseRing ring_;
  unsigned max_degree_;
  std::vector<Rule> rules_;
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pending_;
  Stats stats_;
};

/// Reduced Gröbner basis of the ideal generated by `gens`, leading term first.
inline std::vector<Binomial> buchberger(const std::vector<Binomial>& gens,
                                        const TermOrder& ord = {}) {
  if (gens.empty()) return {};
  return BinomialIdeal(gens, ord).basis();
}

/// Normal form of `f` modulo a Gröbner basis; nullopt means zero.
inline std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& basis,
                                           const TermOrder& ord = {}) {
  if (f.is_zero()) return std::nullopt;
  if (basis.empty()) return oriented(f, ord);
  // Rules are taken as given; the basis is assumed to be a Gröbner basis already.
  DenseRing ring([&] {
    auto vars = detail::variables_of(basis);
    auto more = detail::variables_of({f});
    vars.insert(vars.end(), more.begin(), more.end());
    return vars;
  }());
  std::vector<std::pair<DenseMonomial, DenseMonomial>> rules;
  for (const auto& g : basis) {
    auto o = oriented(g, ord);
    rules.emplace_back(ring.dense(o.plus), ring.dense(o.minus));
  }
  auto reduce = [&](DenseMonomial m) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [lead, tail] : rules)
        if (ring.divides(lead, m)) {
          m = ring.rewrite(m, lead, tail);
          changed = true;
          break;
        }
    }
    return m;
  };
  Binomial r{ring.sparse(reduce(ring.dense(f.plus))), ring.sparse(reduce(ring.dense(f.minus)))};
  if (r.is_zero()) return std::nullopt;
  return oriented(r, ord);
}

}  // namespace polyideal
