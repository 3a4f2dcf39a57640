// Weakly closed paths straight from the defining conditions: search every
// ordering A_1, ..., A_n of the cells as an edge-connected path.

#pragma once

#include <optional>
#include <vector>

#include "brute_grid.hpp"

namespace oracle {

struct PathOrder {
  std::vector<XY> cells;  // A_1 .. A_n
  XY hook;
};

namespace detail {

inline bool meet(XY a, XY b) { return common_vertices(a, b) > 0; }

inline bool conditions_hold(const std::vector<XY>& a) {
  const int n = static_cast<int>(a.size());
  auto at = [&](int k) { return a[static_cast<std::size_t>(((k - 1) % n + n) % n)]; };  // A_0 == A_n
  if (common_vertices(at(0), at(1)) != 1) return false;
  if (meet(at(2), at(0)) || meet(at(n - 1), at(1))) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      bool near = false;
      for (int d = -2; d <= 2; ++d) near = near || ((j - (i + d)) % n + n) % n == 0;
      if (!near && meet(at(i), at(j))) return false;
    }
  return true;
}

inline bool extend(const Cells& c, std::vector<XY>& path, std::set<XY>& used, std::optional<PathOrder>& found) {
  const int n = static_cast<int>(c.size());
  const int k = static_cast<int>(path.size());
  if (k == n) {
    if (!conditions_hold(path)) return false;
    XY hook{};
    for (XY p : cell_vertices(path.back()))
      if (cell_vertices(path.front()).count(p)) hook = p;
    found = PathOrder{path, hook};
    return true;
  }
  auto [x, y] = path.back();
  for (XY d : {XY{1, 0}, XY{-1, 0}, XY{0, 1}, XY{0, -1}}) {
    XY q{x + d.first, y + d.second};
    if (!c.count(q) || used.count(q)) continue;
    // Cells A_j with 3 <= (k+1) - j <= n - 3 may share no vertex with A_{k+1}.
    bool ok = true;
    for (int j = 1; j <= k && ok; ++j) {
      const int gap = k + 1 - j;
      if (gap >= 3 && gap <= n - 3 && meet(path[static_cast<std::size_t>(j - 1)], q)) ok = false;
    }
    if (!ok) continue;
    path.push_back(q);
    used.insert(q);
    const bool done = extend(c, path, used, found);
    used.erase(q);
    path.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace detail

inline std::optional<PathOrder> weakly_closed_path(const Cells& c) {
  if (c.size() <= 6) return std::nullopt;
  std::optional<PathOrder> found;
  for (XY s : c) {
    std::vector<XY> path{s};
    std::set<XY> used{s};
    if (detail::extend(c, path, used, found)) return found;
  }
  return std::nullopt;
}

}  // namespace oracle
