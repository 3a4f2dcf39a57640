// The bipartite graph on maximal edge intervals, its cycles, and the
// correspondence between graph cycles and lattice cycles of a collection.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "grid.hpp"

namespace polyideal {

// Nodes share one id space: vertical intervals take ids [0, nv), horizontal
// intervals take ids [nv, nv + nh).
class BipartiteIntervalGraph {
 public:
  struct Edge {
    int v = 0;
    int h = 0;
    Point witness;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  BipartiteIntervalGraph() = default;

  BipartiteIntervalGraph(std::vector<EdgeInterval> v_nodes, std::vector<EdgeInterval> h_nodes,
                         std::vector<Edge> edges)
      : v_nodes_(std::move(v_nodes)), h_nodes_(std::move(h_nodes)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.v, a.h) < std::tie(b.v, b.h);
    });
    adj_.assign(v_nodes_.size() * h_nodes_.size(), 0);
    neighbours_.assign(node_count(), {});
    for (const auto& e : edges_) {
      adj_[static_cast<std::size_t>(e.v) * h_nodes_.size() + e.h] = 1;
      neighbours_[e.v].push_back(h_id(e.h));
      neighbours_[h_id(e.h)].push_back(e.v);
    }
    for (auto& n : neighbours_) std::sort(n.begin(), n.end());
  }

  const std::vector<EdgeInterval>& v_nodes() const { return v_nodes_; }
  const std::vector<EdgeInterval>& h_nodes() const { return h_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int node_count() const { return static_cast<int>(v_nodes_.size() + h_nodes_.size()); }
  int h_id(int j) const { return static_cast<int>(v_nodes_.size()) + j; }
  bool is_vertical(int id) const { return id < static_cast<int>(v_nodes_.size()); }
  int h_index(int id) const { return id - static_cast<int>(v_nodes_.size()); }
  const EdgeInterval& interval(int id) const {
    return is_vertical(id) ? v_nodes_[id] : h_nodes_[h_index(id)];
  }

  bool has_edge(int v, int h) const {
    return v >= 0 && h >= 0 && v < static_cast<int>(v_nodes_.size()) &&
           h < static_cast<int>(h_nodes_.size()) &&
           adj_[static_cast<std::size_t>(v) * h_nodes_.size() + h];
  }
  /// Adjacency on unified ids.
  bool adjacent(int a, int b) const {
    if (is_vertical(a) == is_vertical(b)) return false;
    if (!is_vertical(a)) std::swap(a, b);
    return has_edge(a, h_index(b));
  }
  const std::vector<int>& neighbours(int id) const { return neighbours_[id]; }

  /// Lattice point V_v ∩ H_h when it is an edge of the graph.
  std::optional<Point> witness(int v, int h) const {
    if (!has_edge(v, h)) return std::nullopt;
    return Point{v_nodes_[v].line, h_nodes_[h].line};
  }

  /// Index of the maximal interval of orientation `o` containing `p`, or -1.
  int interval_containing(Point p, Orientation o) const {
    const auto& nodes = o == Orientation::vertical ? v_nodes_ : h_nodes_;
    const int line = o == Orientation::vertical ? p.x : p.y;
    const int pos = o == Orientation::vertical ? p.y : p.x;
    auto it = std::upper_bound(nodes.begin(), nodes.end(), std::pair{line, pos},
                               [](const std::pair<int, int>& key, const EdgeInterval& e) {
                                 return key < std::pair{e.line, e.lo};
                               });
    if (it == nodes.begin()) return -1;
    --it;
    if (it->line != line || pos > it->hi) return -1;
    return static_cast<int>(it - nodes.begin());
  }

 private:
  std::vector<EdgeInterval> v_nodes_;
  std::vector<EdgeInterval> h_nodes_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<int>> neighbours_;
};

inline BipartiteIntervalGraph build_graph(const CellCollection& p) {
  auto vs = maximal_edge_intervals(p, Orientation::vertical);
  auto hs = maximal_edge_intervals(p, Orientation::horizontal);
  BipartiteIntervalGraph lookup(vs, hs, {});
  std::vector<BipartiteIntervalGraph::Edge> edges;
  edges.reserve(p.vertex_set().size());
  for (Point q : p.vertex_set()) {
    int i = lookup.interval_containing(q, Orientation::vertical);
    int j = lookup.interval_containing(q, Orientation::horizontal);
    if (i < 0 || j < 0) throw Error("dangling vertex " + to_string(q));
    edges.push_back({i, j, q});
  }
  return BipartiteIntervalGraph(std::move(vs), std::move(hs), std::move(edges));
}

// Alternating node sequence v, h, v, h, ... (unified ids); closing edge implied.
struct GraphCycle {
  std::vector<int> nodes;

  std::size_t length() const { return nodes.size(); }
  friend bool operator==(const GraphCycle&, const GraphCycle&) = default;
  friend auto operator<=>(const GraphCycle& a, const GraphCycle& b) { return a.nodes <=> b.nodes; }
};

/// Rotation putting the smallest id first, direction making the second id the smaller neighbour.
inline GraphCycle canonical(GraphCycle c) {
  auto& n = c.nodes;
  if (n.empty()) return c;
  std::rotate(n.begin(), std::min_element(n.begin(), n.end()), n.end());
  if (n.size() > 2 && n.back() < n[1]) std::reverse(n.begin() + 1, n.end());
  return c;
}

inline bool is_graph_cycle(const BipartiteIntervalGraph& g, const GraphCycle& c) {
  const auto& n = c.nodes;
  if (n.size() < 4 || n.size() % 2 != 0) return false;
  std::set<int> distinct(n.begin(), n.end());
  if (distinct.size() != n.size()) return false;
  for (std::size_t k = 0; k < n.size(); ++k)
    if (!g.adjacent(n[k], n[(k + 1) % n.size()])) return false;
  return true;
}

inline bool has_chord(const BipartiteIntervalGraph& g, const GraphCycle& c) {
  const auto& n = c.nodes;
  const std::size_t len = n.size();
  for (std::size_t a = 0; a < len; ++a)
    for (std::size_t b = a + 2; b < len; ++b) {
      if (a == 0 && b == len - 1) continue;
      if (g.adjacent(n[a], n[b])) return true;
    }
  return false;
}

namespace detail {

// Depth-first growth of paths from `start` through larger ids only. With
// `induced` set the path stays chordless and stops at the first closure.
class CycleSearch {
 public:
  CycleSearch(const BipartiteIntervalGraph& g, bool induced, std::size_t min_len,
              std::size_t max_len)
      : g_(g), induced_(induced), min_len_(min_len), max_len_(max_len) {}

  std::vector<GraphCycle> run() {
    in_path_.assign(static_cast<std::size_t>(g_.node_count()), 0);
    for (int s = 0; s < g_.node_count(); ++s) {
      start_ = s;
      path_ = {s};
      in_path_[s] = 1;
      extend();
      in_path_[s] = 0;
    }
    return {found_.begin(), found_.end()};
  }

 private:
  void extend() {
    const int last = path_.back();
    for (int u : g_.neighbours(last)) {
      if (u <= start_ || in_path_[u]) continue;
      if (induced_) {
        bool chord = false;
        for (std::size_t k = 1; k + 1 < path_.size() && !chord; ++k)
          chord = g_.adjacent(u, path_[k]);
        if (chord) continue;
      }
      const bool closes = path_.size() >= 3 && g_.adjacent(u, start_);
      if (closes) {
        const std::size_t len = path_.size() + 1;
        if (len >= min_len_ && len <= max_len_) {
          GraphCycle c{path_};
          c.nodes.push_back(u);
          found_.insert(canonical(std::move(c)));
        }
        if (induced_) continue;
      }
      if (path_.size() + 1 >= max_len_) continue;
      path_.push_back(u);
      in_path_[u] = 1;
      extend();
      in_path_[u] = 0;
      path_.pop_back();
    }
  }

  const BipartiteIntervalGraph& g_;
  bool induced_;
  std::size_t min_len_;
  std::size_t max_len_;
  int start_ = 0;
  std::vector<int> path_;
  std::vector<char> in_path_;
  std::set<GraphCycle> found_;
};

}  // namespace detail

/// Induced cycles of length at least `min_len`, one per rotation/reflection class.
inline std::vector<GraphCycle> enumerate_chordless_cycles(const BipartiteIntervalGraph& g,
                                                          std::size_t min_len) {
  if (min_len < 4 || min_len % 2 != 0) throw Error("min_len must be an even number >= 4");
  return detail::CycleSearch(g, true, min_len, static_cast<std::size_t>(g.node_count())).run();
}

/// All simple cycles of length at most `max_len`.
inline std::vector<GraphCycle> enumerate_cycles(const BipartiteIntervalGraph& g,
                                                std::size_t max_len) {
  return detail::CycleSearch(g, false, 4, max_len).run();
}

/// Every cycle longer than four has a chord.
inline bool is_weakly_chordal(const BipartiteIntervalGraph& g) {
  return enumerate_chordless_cycles(g, 6).empty();
}

// Vertex sequence a_1, ..., a_m of a collection with a_1 == a_m.
struct LatticeCycle {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  /// Distinct vertices a_1, ..., a_{m-1}.
  std::vector<Point> vertices() const {
    if (points.empty()) return {};
    return {points.begin(), points.end() - 1};
  }
  friend bool operator==(const LatticeCycle&, const LatticeCycle&) = default;
};

/// The lattice cycle V_{i1}∩H_{j1}, V_{i2}∩H_{j1}, V_{i2}∩H_{j2}, ..., V_{i1}∩H_{jr}, V_{i1}∩H_{j1}.
inline LatticeCycle cycle_to_primitive_cycle(const BipartiteIntervalGraph& g,
                                             const GraphCycle& c) {
  const auto& n = c.nodes;
  if (n.size() < 4 || n.size() % 2 != 0 || !g.is_vertical(n[0])) throw Error("not a graph cycle");
  const std::size_t r = n.size() / 2;
  auto meet = [&](int v, int h) {
    auto p = g.witness(v, g.h_index(h));
    if (!p) throw Error("not liftable");
    return *p;
  };
  LatticeCycle out;
  for (std::size_t k = 0; k < r; ++k) {
    const int v = n[2 * k];
    const int h = n[2 * k + 1];
    const int v_next = n[(2 * k + 2) % n.size()];
    out.points.push_back(meet(v, h));
    out.points.push_back(meet(v_next, h));
  }
  out.points.push_back(out.points.front());
  return out;
}

/// The four defining conditions of a cycle in a collection.
inline bool is_lattice_cycle(const CellCollection& p, const LatticeCycle& c) {
  const auto& a = c.points;
  const std::size_t m = a.size();
  if (m < 5 || a.front() != a.back()) return false;
  std::vector<Point> distinct(a.begin(), a.end() - 1);
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  std::vector<Orientation> segs;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!is_edge_interval(p, a[i], a[i + 1])) return false;
    segs.push_back(a[i].y == a[i + 1].y ? Orientation::horizontal : Orientation::vertical);
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (segs[i] == segs[(i + 1) % segs.size()]) return false;
  return true;
}

/// Each maximal edge interval holds at most two vertices of the cycle.
inline bool is_primitive_cycle(const CellCollection& p, const LatticeCycle& c) {
  const auto verts = c.vertices();
  for (Orientation o : {Orientation::horizontal, Orientation::vertical})
    for (const auto& e : maximal_edge_intervals(p, o)) {
      auto on = std::count_if(verts.begin(), verts.end(), [&](Point q) { return e.contains(q); });
      if (on > 2) return false;
    }
  return true;
}

/// Reads back the graph cycle traced by a lattice cycle (segments -> maximal intervals).
inline GraphCycle lattice_cycle_to_graph_cycle(const BipartiteIntervalGraph& g,
                                               const LatticeCycle& c) {
  const auto& a = c.points;
  GraphCycle out;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const bool horizontal = a[i].y == a[i + 1].y;
    int idx = g.interval_containing(a[i], horizontal ? Orientation::horizontal
                                                     : Orientation::vertical);
    if (idx < 0) throw Error("segment off the collection");
    out.nodes.push_back(horizontal ? g.h_id(idx) : idx);
  }
  return canonical(std::move(out));
}

/// prod x_{a_{2k-1}} - prod x_{a_{2k}}.
inline Binomial cycle_binomial(const LatticeCycle& c) {
  const std::size_t m = c.size();
  if (m % 2 == 0 || m < 3) throw Error("not a cycle");
  Binomial b;
  for (std::size_t k = 1; k <= (m - 1) / 2; ++k) {
    b.plus.multiply(VariableId::vertex(c.points[2 * k - 2]));
    b.minus.multiply(VariableId::vertex(c.points[2 * k - 1]));
  }
  return b;
}

/// A vertical and a horizontal segment on crossing maximal intervals with four distinct endpoints.
inline bool has_self_crossing(const CellCollection& p, const LatticeCycle& c) {
  const auto& a = c.points;
  struct Segment {
    Point from, to;
    EdgeInterval line;
  };
  std::vector<Segment> vertical, horizontal;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const bool h = a[i].y == a[i + 1].y;
    auto e = maximal_interval_through(p, a[i], h ? Orientation::horizontal : Orientation::vertical);
    if (!e || !e->contains(a[i + 1])) continue;
    (h ? horizontal : vertical).push_back({a[i], a[i + 1], *e});
  }
  for (const auto& s : vertical)
    for (const auto& t : horizontal) {
      std::vector<Point> four{s.from, s.to, t.from, t.to};
      std::sort(four.begin(), four.end());
      if (std::adjacent_find(four.begin(), four.end()) != four.end()) continue;
      if (crossing(s.line, t.line)) return true;
    }
  return false;
}

/// Text dump: `V i line lo hi`, `H j line lo hi`, `E i j wx wy`.
inline std::string dump_graph(const BipartiteIntervalGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.v_nodes().size(); ++i) {
    const auto& e = g.v_nodes()[i];
    os << "V " << i << ' ' << e.line << ' ' << e.lo << ' ' << e.hi << '\n';
  }
  for (std::size_t j = 0; j < g.h_nodes().size(); ++j) {
    const auto& e = g.h_nodes()[j];
    os << "H " << j << ' ' << e.line << ' ' << e.lo << ' ' << e.hi << '\n';
  }
  for (const auto& e : g.edges())
    os << "E " << e.v << ' ' << e.h << ' ' << e.witness.x << ' ' << e.witness.y << '\n';
  return os.str();
}

}  // namespace polyideal
