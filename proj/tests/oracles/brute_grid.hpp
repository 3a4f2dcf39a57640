// Slow, definition-level versions of grid facts. Cells are plain (x, y) pairs
// so nothing here depends on the library's data structures.

#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using XY = std::pair<int, int>;
using Cells = std::set<XY>;

struct Rect {
  XY lo, hi;  // lattice corners, lo < hi componentwise
  bool operator<(const Rect& o) const { return std::tie(lo, hi) < std::tie(o.lo, o.hi); }
  bool operator==(const Rect& o) const { return lo == o.lo && hi == o.hi; }
  bool contains(XY p) const {
    return lo.first <= p.first && p.first <= hi.first && lo.second <= p.second && p.second <= hi.second;
  }
};

inline std::array<XY, 4> bbox(const Cells& c) {
  int x0 = 1 << 20, y0 = 1 << 20, x1 = -(1 << 20), y1 = -(1 << 20);
  for (auto [x, y] : c) {
    x0 = std::min(x0, x); y0 = std::min(y0, y);
    x1 = std::max(x1, x); y1 = std::max(y1, y);
  }
  return {XY{x0, y0}, XY{x1, y1}, XY{}, XY{}};
}

/// Every proper rectangle whose unit cells all belong to c.
inline std::vector<Rect> inner_intervals(const Cells& c) {
  auto b = bbox(c);
  std::vector<Rect> out;
  for (int ax = b[0].first; ax <= b[1].first; ++ax)
    for (int ay = b[0].second; ay <= b[1].second; ++ay)
      for (int bx = ax + 1; bx <= b[1].first + 1; ++bx)
        for (int by = ay + 1; by <= b[1].second + 1; ++by) {
          bool all = true;
          for (int x = ax; x < bx && all; ++x)
            for (int y = ay; y < by && all; ++y) all = c.count({x, y}) > 0;
          if (all) out.push_back({{ax, ay}, {bx, by}});
        }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<XY> vertices(const Cells& c) {
  std::set<XY> v;
  for (auto [x, y] : c)
    for (int dx = 0; dx < 2; ++dx)
      for (int dy = 0; dy < 2; ++dy) v.insert({x + dx, y + dy});
  return v;
}

inline std::set<XY> cell_vertices(XY a) { return vertices(Cells{a}); }

inline std::size_t common_vertices(XY a, XY b) {
  std::size_t k = 0;
  for (XY p : cell_vertices(a)) k += cell_vertices(b).count(p);
  return k;
}

// Components of c where two cells are linked when they share `need` vertices.
inline std::size_t components(const Cells& c, std::size_t need) {
  std::set<XY> seen;
  std::size_t k = 0;
  for (XY s : c) {
    if (seen.count(s)) continue;
    ++k;
    std::queue<XY> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      XY a = q.front();
      q.pop();
      for (XY b : c)
        if (!seen.count(b) && common_vertices(a, b) >= need) {
          seen.insert(b);
          q.push(b);
        }
    }
  }
  return k;
}

inline bool is_polyomino(const Cells& c) { return components(c, 2) == 1; }
inline bool is_weakly_connected(const Cells& c) { return components(c, 1) == 1; }

/// Complement cells of the bounding box that cannot reach outside it through edges.
inline Cells hole_cells(const Cells& c) {
  auto b = bbox(c);
  const int x0 = b[0].first - 1, y0 = b[0].second - 1, x1 = b[1].first + 1, y1 = b[1].second + 1;
  std::set<XY> out_reach;
  std::queue<XY> q;
  q.push({x0, y0});
  out_reach.insert({x0, y0});
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    for (XY d : {XY{1, 0}, XY{-1, 0}, XY{0, 1}, XY{0, -1}}) {
      XY n{x + d.first, y + d.second};
      if (n.first < x0 || n.first > x1 || n.second < y0 || n.second > y1) continue;
      if (c.count(n) || out_reach.count(n)) continue;
      out_reach.insert(n);
      q.push(n);
    }
  }
  Cells h;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y)
      if (!c.count({x, y}) && !out_reach.count({x, y})) h.insert({x, y});
  return h;
}

inline std::size_t hole_count(const Cells& c) {
  Cells h = hole_cells(c);
  return h.empty() ? 0 : components(h, 2);
}

/// Unit edge between lattice points a and b (adjacent) belongs to a cell of c.
inline bool unit_edge(const Cells& c, XY a, XY b) {
  if (a > b) std::swap(a, b);
  if (a.first == b.first)  // vertical edge: cells to its left and right
    return c.count({a.first - 1, a.second}) || c.count({a.first, a.second});
  return c.count({a.first, a.second - 1}) || c.count({a.first, a.second});
}

/// a and b lie on one horizontal or vertical run of edges of c.
inline bool same_edge_interval(const Cells& c, XY a, XY b) {
  if (a == b) return false;
  if (a.first != b.first && a.second != b.second) return false;
  if (a > b) std::swap(a, b);
  XY p = a;
  while (p != b) {
    XY q = a.first == b.first ? XY{p.first, p.second + 1} : XY{p.first + 1, p.second};
    if (!unit_edge(c, p, q)) return false;
    p = q;
  }
  return true;
}

/// Some inner interval contains both points (closed rectangles).
inline bool co_inner(const std::vector<Rect>& inner, XY a, XY b) {
  for (const auto& r : inner)
    if (r.contains(a) && r.contains(b)) return true;
  return false;
}

}  // namespace oracle
