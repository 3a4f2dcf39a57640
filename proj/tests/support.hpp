#pragma once

#include <random>
#include <string>

#include "oracles/brute_grid.hpp"
#include "polyideal/polyideal.hpp"

namespace polyideal {
inline void PrintTo(Point p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(Cell c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const CellCollection& p, std::ostream* os) { *os << "\n" << render_ascii(p); }
}  // namespace polyideal

namespace testing_support {

inline oracle::Cells to_oracle(const polyideal::CellCollection& p) {
  oracle::Cells c;
  for (auto cell : p) c.insert({cell.x(), cell.y()});
  return c;
}

inline polyideal::CellCollection from_oracle(const oracle::Cells& c) {
  std::vector<polyideal::Cell> cells;
  for (auto [x, y] : c) cells.emplace_back(x, y);
  return polyideal::CellCollection(std::move(cells));
}

inline polyideal::CellCollection fixture(int k) {
  return polyideal::parse_ascii(
      polyideal::read_file(std::string(POLYIDEAL_FIXTURES) + "/F" + std::to_string(k) + ".txt"));
}

inline std::string golden_path(const std::string& name) { return std::string(POLYIDEAL_GOLDEN) + "/" + name; }

/// Weakly connected collection of up to `max_cells` cells in at most `max_parts`
/// edge-connected pieces, built by random growth; corner-only joins between pieces.
inline polyideal::CellCollection random_weak_collection(std::mt19937& rng, int max_cells, int max_parts) {
  std::uniform_int_distribution<int> cells_d(1, max_cells), parts_d(1, max_parts), pick(0, 1 << 20);
  const int n = cells_d(rng);
  const int parts = std::min(parts_d(rng), n);
  oracle::Cells c{{0, 0}};
  int pieces = 1;
  while (static_cast<int>(c.size()) < n) {
    std::vector<oracle::XY> frontier_edge, frontier_corner;
    for (auto [x, y] : c)
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          if (!dx && !dy) continue;
          oracle::XY q{x + dx, y + dy};
          if (c.count(q)) continue;
          (dx && dy ? frontier_corner : frontier_edge).push_back(q);
        }
    const bool corner = pieces < parts && !frontier_corner.empty() && pick(rng) % 3 == 0;
    auto& f = corner ? frontier_corner : frontier_edge;
    oracle::XY q = f[static_cast<std::size_t>(pick(rng)) % f.size()];
    c.insert(q);
    pieces = static_cast<int>(oracle::components(c, 2));
    if (pieces > parts) c.erase(q);
  }
  return from_oracle(c);
}

}  // namespace testing_support
