// Primality verdicts with checkable evidence, and a cross-check audit.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grid.hpp"
#include "interval_graph.hpp"
#include "pathclass.hpp"
#include "toric.hpp"
#include "zigzag.hpp"

namespace polyideal {

struct Budget {
  std::size_t zigzag_nodes = kDefaultNodeBudget;
  std::size_t zigzag_max_len = 0;  // 0: default bound for the collection
  unsigned oracle_degree = 4;
  std::size_t monomial_cap = kDefaultMonomialCap;
  friend bool operator==(const Budget&, const Budget&) = default;
};

enum class Status { prime, not_prime, conjecturally_prime, inconclusive };

enum class Rule {
  not_weakly_connected,
  simple,
  path_configuration,
  path_without_configuration,
  zigzag_walk,
  no_zigzag_conjecture,
  budget_exhausted,
  oracle_failed,
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::prime:
      return "Prime";
    case Status::not_prime:
      return "NotPrime";
    case Status::conjecturally_prime:
      return "ConjecturallyPrime";
    case Status::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::not_weakly_connected:
      return "not-weakly-connected";
    case Rule::simple:
      return "simple";
    case Rule::path_configuration:
      return "weakly-closed-path-configuration";
    case Rule::path_without_configuration:
      return "weakly-closed-path-no-configuration";
    case Rule::zigzag_walk:
      return "zigzag-walk";
    case Rule::no_zigzag_conjecture:
      return "no-zigzag-conjecture";
    case Rule::budget_exhausted:
      return "budget-exhausted";
    case Rule::oracle_failed:
      return "oracle-failed";
  }
  return "?";
}

/// The statement each rule rests on.
inline const char* citation(Rule r) {
  switch (r) {
    case Rule::not_weakly_connected:
      return "rules apply to weakly connected collections only";
    case Rule::simple:
      return "simple weakly connected collection: I_P equals the toric ideal J_P, hence prime";
    case Rule::path_configuration:
      return "weakly closed path with an L-configuration, weak L-configuration, ladder of at "
             "least three steps or weak ladder: I_P is prime (toric for the hole-marked map)";
    case Rule::path_without_configuration:
      return "weakly closed path without configuration contains a zig-zag walk, so I_P is "
             "not prime";
    case Rule::zigzag_walk:
      return "a zig-zag walk yields a binomial outside I_P whose multiple lies in I_P, so I_P "
             "is not prime";
    case Rule::no_zigzag_conjecture:
      return "conjecture: a weakly connected collection without zig-zag walks has prime I_P";
    case Rule::budget_exhausted:
      return "zig-zag search exceeded its budget";
    case Rule::oracle_failed:
      return "degree-bounded toric comparison did not confirm the configuration map";
  }
  return "";
}

// G(P) has no chordless cycle longer than 4.
struct ChordalityCertificate {
  std::size_t v_nodes = 0;
  std::size_t h_nodes = 0;
  std::size_t edges = 0;
  bool weakly_chordal = false;
  friend bool operator==(const ChordalityCertificate&, const ChordalityCertificate&) = default;
};

using Evidence = std::variant<std::monostate, ChordalityCertificate, ZigZagWalk, ConfigurationWitness>;

struct Verdict {
  Status status = Status::inconclusive;
  Rule rule = Rule::budget_exhausted;
  std::string reason;
  Evidence evidence;
  std::optional<WeaklyClosedPathWitness> path;
  std::optional<ToricEqualityReport> oracle;
  std::vector<Point> marked;  // marked set behind `oracle`
  std::size_t search_nodes = 0;

  std::string citation() const { return polyideal::citation(rule); }
};

inline ChordalityCertificate chordality_certificate(const CellCollection& p) {
  const auto g = build_graph(p);
  return {g.v_nodes().size(), g.h_nodes().size(), g.edges().size(), is_weakly_chordal(g)};
}

namespace detail {

inline Verdict from_search(const ZigZagSearchResult& r, Status none_status, Rule none_rule) {
  Verdict v;
  v.search_nodes = r.nodes;
  switch (r.status) {
    case SearchStatus::found:
      v.status = Status::not_prime;
      v.rule = Rule::zigzag_walk;
      v.evidence = *r.walk;
      break;
    case SearchStatus::none:
      v.status = none_status;
      v.rule = none_rule;
      break;
    case SearchStatus::inconclusive:
      v.status = Status::inconclusive;
      v.rule = Rule::budget_exhausted;
      v.reason = "zig-zag search stopped after " + std::to_string(r.nodes) + " nodes";
      break;
  }
  return v;
}

}  // namespace detail

/// Rules in order: weak connectivity, simplicity, weakly closed path, zig-zag search, conjecture.
inline Verdict classify(const CellCollection& p, const Budget& budget = {}) {
  if (p.empty()) throw Error("empty collection");
  Verdict v;
  if (!is_weakly_connected(p)) {
    v.status = Status::inconclusive;
    v.rule = Rule::not_weakly_connected;
    v.reason = "collection splits into " + std::to_string(connected_components(p).size()) +
               " weakly connected components";
    return v;
  }
  if (is_simple(p)) {
    v.status = Status::prime;
    v.rule = Rule::simple;
    v.evidence = chordality_certificate(p);
    return v;
  }

  std::optional<WeaklyClosedPathWitness> path;
  if (is_polyomino(p)) path = recognize_weakly_closed_path(p);
  if (path) {
    if (auto w = find_any_prime_configuration(p)) {
      v.path = path;
      v.evidence = *w;
      v.marked = marked_set_for_configuration(p, *w);
      try {
        v.oracle = toric_equality_report(p, hole_toric_map(p, v.marked), budget.oracle_degree,
                                         budget.monomial_cap);
      } catch (const Error& e) {
        v.status = Status::inconclusive;
        v.rule = Rule::budget_exhausted;
        v.reason = std::string("toric comparison: ") + e.what();
        return v;
      }
      if (v.oracle->passed()) {
        v.status = Status::prime;
        v.rule = Rule::path_configuration;
      } else {
        v.status = Status::inconclusive;
        v.rule = Rule::oracle_failed;
      }
      return v;
    }
    // No configuration: the walk the equivalence promises is searched for and attached.
    auto r = find_zigzag_walk(p, budget.zigzag_max_len, budget.zigzag_nodes);
    Verdict out = detail::from_search(r, Status::inconclusive, Rule::budget_exhausted);
    out.path = path;
    if (r.status == SearchStatus::found) out.rule = Rule::path_without_configuration;
    if (r.status == SearchStatus::none) out.reason = "no zig-zag walk within length " +
                                                     std::to_string(r.max_len);
    return out;
  }

  auto r = find_zigzag_walk(p, budget.zigzag_max_len, budget.zigzag_nodes);
  return detail::from_search(r, Status::conjecturally_prime, Rule::no_zigzag_conjecture);
}

struct Violation {
  std::string check;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Cross-checks between independent parts of the theory. When a verdict is
/// given, its evidence is re-verified as well.
inline std::vector<Violation> consistency_audit(const CellCollection& p,
                                                const std::optional<Verdict>& verdict = {},
                                                const Budget& budget = {}) {
  std::vector<Violation> out;
  if (p.empty()) return {{"input", "empty collection"}};
  const bool weak = is_weakly_connected(p);
  const bool simple = is_simple(p);
  std::optional<ZigZagSearchResult> search;
  auto zigzag = [&]() -> const ZigZagSearchResult& {
    if (!search) search = find_zigzag_walk(p, budget.zigzag_max_len, budget.zigzag_nodes);
    return *search;
  };

  if (weak && simple) {
    if (zigzag().status == SearchStatus::found)
      out.push_back({"simple-no-zigzag", "zig-zag walk in a simple collection"});
    if (!is_weakly_chordal(build_graph(p)))
      out.push_back({"simple-weakly-chordal", "G(P) has a chordless cycle longer than 4"});
  }

  std::optional<WeaklyClosedPathWitness> path;
  if (is_polyomino(p)) path = recognize_weakly_closed_path(p);
  if (path) {
    if (holes(p).size() != 1)
      out.push_back({"path-one-hole", std::to_string(holes(p).size()) + " holes"});
    const auto w = find_any_prime_configuration(p);
    if (w && !verify_configuration(p, *w))
      out.push_back({"configuration-recheck", std::string(kind_name(*w)) + " fails its definition"});
    const auto& z = zigzag();
    if (w && z.status == SearchStatus::found)
      out.push_back({"configuration-no-zigzag",
                     std::string(kind_name(*w)) + " together with a zig-zag walk"});
    if (!w && z.status == SearchStatus::none)
      out.push_back({"no-configuration-zigzag", "no configuration and no zig-zag walk"});
  }
  if (search && search->walk && !verify_zigzag_walk(p, *search->walk))
    out.push_back({"walk-recheck", "search returned a walk that fails verification"});

  if (!verdict) return out;
  const Verdict& v = *verdict;
  if (const auto* walk = std::get_if<ZigZagWalk>(&v.evidence)) {
    if (!verify_zigzag_walk(p, *walk))
      out.push_back({"verdict-walk", "attached walk fails verification"});
  } else if (const auto* w = std::get_if<ConfigurationWitness>(&v.evidence)) {
    if (!path || !verify_configuration(p, *w))
      out.push_back({"verdict-configuration", "attached configuration fails its definition"});
  } else if (const auto* c = std::get_if<ChordalityCertificate>(&v.evidence)) {
    if (!(*c == chordality_certificate(p)) || !c->weakly_chordal)
      out.push_back({"verdict-chordality", "certificate does not match G(P)"});
  }
  if (v.status == Status::not_prime && !std::holds_alternative<ZigZagWalk>(v.evidence))
    out.push_back({"verdict-not-prime", "NotPrime without a zig-zag walk"});
  if (v.status == Status::prime) {
    const bool by_simple = v.rule == Rule::simple && weak && simple;
    const bool by_config = v.rule == Rule::path_configuration &&
                           std::holds_alternative<ConfigurationWitness>(v.evidence) && v.oracle &&
                           v.oracle->passed();
    if (!by_simple && !by_config)
      out.push_back({"verdict-prime", "Prime without the simple rule or a confirmed configuration"});
  }
  if (v.path && (!path || !verify_weakly_closed_path(p, *v.path)))
    out.push_back({"verdict-path", "attached path ordering fails verification"});
  if (v.oracle) {
    try {
      const auto replay = toric_equality_report(p, hole_toric_map(p, v.marked), v.oracle->degree,
                                                budget.monomial_cap);
      if (replay.passed() != v.oracle->passed() || replay.basis_size != v.oracle->basis_size ||
          replay.standard_monomials != v.oracle->standard_monomials)
        out.push_back({"verdict-oracle", "toric comparison does not replay"});
    } catch (const Error& e) {
      out.push_back({"verdict-oracle", e.what()});
    }
  }
  return out;
}

}  // namespace polyideal
