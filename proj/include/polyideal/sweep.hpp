// Classification sweep over all fixed polyominoes up to a size.

#pragma once

#include <array>
#include <chrono>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "enumerate.hpp"

namespace polyideal {

inline constexpr int kMaxSweepCells = 12;

struct SweepFinding {
  CellCollection collection;
  Violation violation;
};

struct SweepRow {
  int n = 0;
  std::size_t collections = 0;
  std::array<std::size_t, 4> totals{};  // indexed by Status
  std::size_t weakly_closed_paths = 0;
  // Toric comparison for no-zig-zag collections with holes: recipe map on
  // weakly closed paths, edge-ring map otherwise.
  std::size_t oracle_runs = 0;
  std::size_t oracle_passed = 0;
  std::size_t oracle_skipped = 0;  // degree bound over the monomial cap
  std::vector<SweepFinding> violations;
  std::vector<CellCollection> inconclusive;
  double seconds = 0;

  std::size_t count(Status s) const { return totals[static_cast<std::size_t>(s)]; }

  void merge(const SweepRow& o) {
    collections += o.collections;
    for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += o.totals[k];
    weakly_closed_paths += o.weakly_closed_paths;
    oracle_runs += o.oracle_runs;
    oracle_passed += o.oracle_passed;
    oracle_skipped += o.oracle_skipped;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    inconclusive.insert(inconclusive.end(), o.inconclusive.begin(), o.inconclusive.end());
  }
};

struct SweepReport {
  int n_max = 0;
  unsigned degree = 0;
  unsigned jobs = 1;
  std::vector<SweepRow> rows;
  double seconds = 0;

  std::size_t violation_count() const {
    std::size_t k = 0;
    for (const auto& r : rows) k += r.violations.size();
    return k;
  }
};

namespace detail {

inline void sweep_one(const CellCollection& p, unsigned degree, const Budget& budget, SweepRow& row) {
  ++row.collections;
  const Verdict v = classify(p, budget);
  ++row.totals[static_cast<std::size_t>(v.status)];
  if (v.path) ++row.weakly_closed_paths;
  if (v.status == Status::inconclusive) row.inconclusive.push_back(p);
  for (auto& x : consistency_audit(p, v, budget)) row.violations.push_back({p, std::move(x)});

  if (v.oracle) {
    ++row.oracle_runs;
    row.oracle_passed += v.oracle->passed();
  } else if (v.status == Status::conjecturally_prime) {
    try {
      ++row.oracle_runs;
      row.oracle_passed += toric_equality_report(p, edge_ring_map(p), degree, budget.monomial_cap).passed();
    } catch (const Error&) {
      --row.oracle_runs;
      ++row.oracle_skipped;
    }
  }
}

}  // namespace detail

/// Classifies and audits every fixed polyomino with 1..n_max cells. Work for
/// each size is split by generation index across `jobs` threads.
inline SweepReport conjecture_sweep(int n_max, unsigned degree, unsigned jobs = 1, Budget budget = {}) {
  if (n_max < 1 || n_max > kMaxSweepCells) throw Error("sweep size out of range");
  if (degree < 2) throw Error("degree bound must be at least 2");
  if (jobs == 0) jobs = 1;
  budget.oracle_degree = degree;
  SweepReport report;
  report.n_max = n_max;
  report.degree = degree;
  report.jobs = jobs;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto corpus = enumerate_fixed_polyominoes(n);
    std::vector<SweepRow> parts(jobs);
    auto work = [&](unsigned k) {
      for (std::size_t i = k; i < corpus.size(); i += jobs) detail::sweep_one(corpus[i], degree, budget, parts[k]);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(work, k);
      for (auto& t : pool) t.join();
    }
    SweepRow row;
    row.n = n;
    for (const auto& part : parts) row.merge(part);
    std::sort(row.inconclusive.begin(), row.inconclusive.end());
    std::stable_sort(row.violations.begin(), row.violations.end(),
                     [](const SweepFinding& a, const SweepFinding& b) { return a.collection < b.collection; });
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(std::move(row));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace polyideal
