// Exhaustive generation of fixed polyominoes and of weakly closed paths.

#pragma once

#include <cstdlib>
#include <functional>
#include <vector>

#include "grid.hpp"

namespace polyideal {

inline constexpr int kMaxEnumerationCells = 24;

namespace detail {

// Redelmeier's method: cells are added in the half plane y > 0 or (y = 0, x >= 0),
// each cell entering the untried set at most once per branch.
class Redelmeier {
 public:
  Redelmeier(int n, const std::function<void(const std::vector<Cell>&)>& emit)
      : n_(n), w_(2 * n + 1), emit_(emit) {
    reached_.assign(static_cast<std::size_t>(w_) * (n + 2), 0);
  }

  void run() {
    std::vector<Point> untried{{0, 0}};
    mark({0, 0});
    grow(untried);
  }

 private:
  bool admissible(Point p) const { return p.y > 0 || (p.y == 0 && p.x >= 0); }
  std::size_t slot(Point p) const {
    return static_cast<std::size_t>(p.y) * w_ + static_cast<std::size_t>(p.x + n_);
  }
  void mark(Point p) { reached_[slot(p)] = 1; }
  void unmark(Point p) { reached_[slot(p)] = 0; }
  bool reached(Point p) const { return reached_[slot(p)] != 0; }

  void grow(std::vector<Point> untried) {
    while (!untried.empty()) {
      const Point c = untried.back();
      untried.pop_back();
      cells_.emplace_back(c);
      if (static_cast<int>(cells_.size()) == n_) {
        emit_(cells_);
      } else {
        std::vector<Point> fresh;
        for (Point d : kEdgeSteps) {
          Point q = c + d;
          if (!admissible(q) || q.y > n_ || std::abs(q.x) > n_ || reached(q)) continue;
          mark(q);
          fresh.push_back(q);
        }
        std::vector<Point> next = untried;
        next.insert(next.end(), fresh.begin(), fresh.end());
        grow(std::move(next));
        for (Point q : fresh) unmark(q);
      }
      cells_.pop_back();
    }
  }

  int n_;
  int w_;
  const std::function<void(const std::vector<Cell>&)>& emit_;
  std::vector<char> reached_;
  std::vector<Cell> cells_;
};

}  // namespace detail

/// Calls `f` once per fixed polyomino with `n` cells, translated to the origin.
inline void for_each_fixed_polyomino(int n, const std::function<void(const CellCollection&)>& f) {
  if (n < 1 || n > kMaxEnumerationCells) throw Error("cell count out of range");
  std::function<void(const std::vector<Cell>&)> emit = [&](const std::vector<Cell>& cells) {
    f(canonicalize(CellCollection(cells)));
  };
  detail::Redelmeier(n, emit).run();
}

inline std::vector<CellCollection> enumerate_fixed_polyominoes(int n) {
  std::vector<CellCollection> out;
  for_each_fixed_polyomino(n, [&](const CellCollection& p) { out.push_back(p); });
  return out;
}

namespace detail {

// Grows A_1, A_2, ... from A_1 = (0, 0). Cells at path distance >= 3 share no
// vertex, except A_1 and A_n which share exactly one.
class PathGrower {
 public:
  PathGrower(int n, const std::function<void(const std::vector<Cell>&)>& emit)
      : n_(n), emit_(emit) {}

  void run() {
    path_ = {Cell{0, 0}};
    grow();
  }

 private:
  static int distance_to_hook(Point c) {
    // Fewest edge steps from c to a cell diagonal to the origin cell.
    int best = 1 << 20;
    for (Point t : {Point{1, 1}, Point{1, -1}, Point{-1, 1}, Point{-1, -1}})
      best = std::min(best, std::abs(c.x - t.x) + std::abs(c.y - t.y));
    return best;
  }

  void grow() {
    const int k = static_cast<int>(path_.size());
    if (k == n_) {
      emit_(path_);
      return;
    }
    const Cell last = path_.back();
    for (Point d : kEdgeSteps) {
      const Cell c{last.lower_left + d};
      const int remaining = n_ - k - 1;
      if (distance_to_hook(c.lower_left) > remaining) continue;
      if (!fits(c, k + 1)) continue;
      path_.push_back(c);
      grow();
      path_.pop_back();
    }
  }

  // Checks the new cell A_index against A_1, ..., A_{index-3}.
  bool fits(Cell c, int index) const {
    for (int j = 1; j <= index - 1; ++j) {
      const Cell a = path_[static_cast<std::size_t>(j - 1)];
      if (a == c) return false;
      if (index - j < 3) continue;
      const int dx = std::abs(a.x() - c.x()), dy = std::abs(a.y() - c.y());
      const bool touch = dx <= 1 && dy <= 1;
      if (j == 1 && index == n_) {
        if (!(dx == 1 && dy == 1)) return false;
      } else if (touch) {
        return false;
      }
    }
    return true;
  }

  int n_;
  const std::function<void(const std::vector<Cell>&)>& emit_;
  std::vector<Cell> path_;
};

}  // namespace detail

/// Calls `f` once per fixed weakly closed path with `n` cells (n > 6), translated to the origin.
inline void for_each_weakly_closed_path(int n,
                                        const std::function<void(const CellCollection&)>& f) {
  if (n <= 6) throw Error("a weakly closed path has more than six cells");
  if (n > kMaxEnumerationCells) throw Error("cell count out of range");
  std::function<void(const std::vector<Cell>&)> emit = [&](const std::vector<Cell>& path) {
    // Each path is met from both ends; keep the run starting at the lesser end cell.
    if (path.back() < path.front()) return;
    f(canonicalize(CellCollection(path)));
  };
  detail::PathGrower(n, emit).run();
}

inline std::vector<CellCollection> enumerate_weakly_closed_paths(int n) {
  std::vector<CellCollection> out;
  for_each_weakly_closed_path(n, [&](const CellCollection& p) { out.push_back(p); });
  return out;
}

}  // namespace polyideal
