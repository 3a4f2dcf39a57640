// Closed and weakly closed paths, and the four block patterns that make a
// weakly closed path prime.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "grid.hpp"

namespace polyideal {

struct WeaklyClosedPathWitness {
  std::vector<Cell> ordering;  // A_1, ..., A_n; A_0 is A_n
  Point hooking_corner;

  std::size_t size() const { return ordering.size(); }
  friend bool operator==(const WeaklyClosedPathWitness&, const WeaklyClosedPathWitness&) = default;
};

namespace detail {

inline std::vector<Point> cell_vertices(Cell c) {
  auto k = c.corners();
  std::vector<Point> v(k.begin(), k.end());
  std::sort(v.begin(), v.end());
  return v;
}

inline std::size_t shared_vertices(Cell a, Cell b) {
  const int dx = std::abs(a.x() - b.x()), dy = std::abs(a.y() - b.y());
  if (dx > 1 || dy > 1) return 0;
  if (dx + dy == 0) return 4;
  return dx + dy == 1 ? 2 : 1;
}

inline bool edge_adjacent(Cell a, Cell b) { return shared_vertices(a, b) == 2; }

inline std::vector<Cell> edge_neighbours(const CellCollection& p, Cell c) {
  std::vector<Cell> out;
  for (Point d : kEdgeSteps)
    if (p.contains(Cell{c.lower_left + d})) out.emplace_back(c.lower_left + d);
  return out;
}

inline void require_polyomino(const CellCollection& p) {
  if (!is_polyomino(p)) throw Error("not a polyomino");
}

// Walks the cell-adjacency path from `start`; every cell must have degree <= 2.
inline std::vector<Cell> trace(const CellCollection& p, Cell start) {
  std::vector<Cell> order{start};
  Cell prev = start;
  Cell cur = start;
  for (;;) {
    std::optional<Cell> next;
    for (Cell n : edge_neighbours(p, cur))
      if (n != prev && n != cur && !(order.size() > 1 && n == order.front())) next = n;
    if (!next || order.size() == p.size()) break;
    prev = cur;
    cur = *next;
    order.push_back(cur);
  }
  return order;
}

/// Cells at cyclic distance > 2 share no vertex.
inline bool cyclic_non_contact(const std::vector<Cell>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t d = std::min(j - i, n - (j - i));
      if (d > 2 && shared_vertices(a[i], a[j]) > 0) return false;
    }
  return true;
}

}  // namespace detail

/// Cyclic ordering of a closed path, if `p` is one.
inline std::optional<std::vector<Cell>> recognize_closed_path(const CellCollection& p) {
  detail::require_polyomino(p);
  if (p.size() < 4) return std::nullopt;
  for (Cell c : p)
    if (detail::edge_neighbours(p, c).size() != 2) return std::nullopt;
  auto order = detail::trace(p, p.cells().front());
  if (order.size() != p.size() || !detail::edge_adjacent(order.front(), order.back()))
    return std::nullopt;
  if (!detail::cyclic_non_contact(order)) return std::nullopt;
  // Direction: the second cell is the smaller neighbour of the first.
  if (order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
  return order;
}

/// Independent condition-by-condition check of a weakly closed path ordering.
inline bool verify_weakly_closed_path(const CellCollection& p, const WeaklyClosedPathWitness& w) {
  const auto& a = w.ordering;
  const std::size_t n = a.size();
  if (n <= 6 || n != p.size()) return false;
  if (std::set<Cell>(a.begin(), a.end()).size() != n) return false;
  for (Cell c : a)
    if (!p.contains(c)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!detail::edge_adjacent(a[i], a[i + 1])) return false;
  auto at = [&](std::size_t k) { return a[(k + n - 1) % n]; };  // A_k, A_0 == A_n
  auto meet = [](Cell x, Cell y) {
    return common_points(detail::cell_vertices(x), detail::cell_vertices(y));
  };
  auto hook = meet(at(0), at(1));
  if (hook.size() != 1 || hook.front() != w.hooking_corner) return false;
  if (!meet(at(2), at(0)).empty() || !meet(at(n - 1), at(1)).empty()) return false;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t d = (j + n - i) % n;
      if (d <= 2 || d >= n - 2) continue;
      if (!meet(at(i), at(j)).empty()) return false;
    }
  return true;
}

inline std::optional<WeaklyClosedPathWitness> recognize_weakly_closed_path(
    const CellCollection& p) {
  detail::require_polyomino(p);
  if (p.size() <= 6) return std::nullopt;
  std::vector<Cell> ends;
  for (Cell c : p) {
    const std::size_t deg = detail::edge_neighbours(p, c).size();
    if (deg > 2) return std::nullopt;
    if (deg == 1) ends.push_back(c);
  }
  if (ends.size() != 2) return std::nullopt;
  // A_1 is the lesser end cell.
  auto order = detail::trace(p, ends.front());
  if (order.size() != p.size()) return std::nullopt;
  auto hook = common_points(detail::cell_vertices(order.back()),
                            detail::cell_vertices(order.front()));
  if (hook.size() != 1) return std::nullopt;
  WeaklyClosedPathWitness w{std::move(order), hook.front()};
  if (!verify_weakly_closed_path(p, w)) return std::nullopt;
  return w;
}

// ---------------------------------------------------------------------------
// Configurations. Each witness records a dihedral map `frame` that carries it
// to a fixed reference position; the marked-set recipes are stated there.
//
// Reference positions:
//   L:         C_1, C_2, C_3 run east, C_3, C_4, C_5 run north.
//   weak L:    [A, B] horizontal with A west of B, C = A + (-1, 1), [D, F] runs north from B.
//   ladder:    horizontal blocks descending eastwards; B_{m-1} lies directly above B_m,
//              its last cell above the first cell of B_m, and the hole (if any) touches
//              the staircase from the north-east.
//   weak ladder: C_1, ..., C_n run east, C = C_1 + (-1, 1), D = C_n - (0, 1).

struct LConfiguration {
  std::array<Cell, 5> cells;
  Dihedral frame;
  friend bool operator==(const LConfiguration&, const LConfiguration&) = default;
};

struct WeakLConfiguration {
  Cell c;
  Block ab;  // [A, B], A first in the reference position
  Block df;  // [D, F], D next to [A, B]
  Point a1, a2, b2;
  Dihedral frame;
  friend bool operator==(const WeakLConfiguration&, const WeakLConfiguration&) = default;
};

struct Ladder {
  std::vector<Block> blocks;  // B_1, ..., B_m
  std::vector<std::pair<Point, Point>> contacts;  // {a_i, b_i} = V(B_i) ∩ V(B_{i+1})
  Dihedral frame;
  std::size_t steps() const { return blocks.size(); }
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

struct WeakLadder {
  Cell c;
  Cell d;
  Block ab;  // C_1, ..., C_n
  Point a1, a2, b2;
  Orientation c_block = Orientation::vertical;  // orientation of the block containing C
  Dihedral frame;
  friend bool operator==(const WeakLadder&, const WeakLadder&) = default;
};

using ConfigurationWitness = std::variant<LConfiguration, WeakLConfiguration, Ladder, WeakLadder>;

inline const char* kind_name(const ConfigurationWitness& w) {
  switch (w.index()) {
    case 0:
      return "L-configuration";
    case 1:
      return "weak L-configuration";
    case 2:
      return "ladder";
    default:
      return "weak ladder";
  }
}

inline Dihedral frame_of(const ConfigurationWitness& w) {
  return std::visit([](const auto& x) { return x.frame; }, w);
}

// How a single-vertex contact between C and a block is read. `literal` takes
// the vertex condition alone. `pinched` also asks that neither cell sharing an
// edge with both C and the touched block cell belongs to the collection, so C
// and the block meet only in that corner.
enum class CornerContact { literal, pinched };

struct ConfigurationOptions {
  CornerContact weak_l_contact = CornerContact::pinched;
  CornerContact weak_ladder_contact = CornerContact::pinched;
};

namespace detail {

inline Point step_of(Orientation o) { return o == Orientation::horizontal ? Point{1, 0} : Point{0, 1}; }
inline Point normal_of(Orientation o) { return o == Orientation::horizontal ? Point{0, 1} : Point{1, 0}; }

inline Block make_block(Orientation o, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  return Block{o, std::move(cells), false};
}

inline Block transform_block(const Block& b, Dihedral t) {
  std::vector<Cell> cells;
  for (Cell c : b.cells) cells.push_back(t.apply(c));
  Orientation o = b.orientation;
  if (cells.size() > 1) o = cells[0].x() == cells[1].x() ? Orientation::vertical : Orientation::horizontal;
  else if (t.index % 2 == 1) o = other(o);
  Block out = make_block(o, std::move(cells));
  out.maximal = b.maximal;
  return out;
}

/// Corner shared by two diagonally touching cells.
inline Point diagonal_corner(Cell a, Cell b) {
  return {std::max(a.x(), b.x()), std::max(a.y(), b.y())};
}

inline bool pinched(const CellCollection& p, Cell c, Cell x) {
  return !p.contains(Cell{Point{c.x(), x.y()}}) && !p.contains(Cell{Point{x.x(), c.y()}});
}

// Cells meeting the block in exactly one vertex, paired with the touched block cell.
inline std::vector<std::pair<Cell, Cell>> corner_contacts(const CellCollection& p, const Block& b,
                                                          CornerContact rule) {
  std::vector<std::pair<Cell, Cell>> out;
  const auto bv = b.vertices();
  for (Cell x : {b.first(), b.last()})
    for (Point d : {Point{1, 1}, Point{1, -1}, Point{-1, 1}, Point{-1, -1}}) {
      Cell c{x.lower_left + d};
      if (!p.contains(c) || b.contains(c)) continue;
      if (common_points(cell_vertices(c), bv).size() != 1) continue;
      if (rule == CornerContact::pinched && !pinched(p, c, x)) continue;
      if (std::find(out.begin(), out.end(), std::pair{c, x}) == out.end()) out.push_back({c, x});
    }
  return out;
}

/// Whether two contact segments lie on one edge interval of `p`.
inline bool same_edge_interval(const CellCollection& p, std::pair<Point, Point> s,
                               std::pair<Point, Point> t) {
  std::vector<Point> pts{s.first, s.second, t.first, t.second};
  std::sort(pts.begin(), pts.end());
  const Point lo = pts.front(), hi = pts.back();
  if (lo.x != hi.x && lo.y != hi.y) return false;
  return is_edge_interval(p, lo, hi);
}

inline std::vector<Block> long_blocks(const CellCollection& p, Orientation o) {
  std::vector<Block> out;
  for (auto& b : maximal_blocks(p, o))
    if (b.length() >= 2) out.push_back(std::move(b));
  return out;
}

template <class Pred>
std::optional<Dihedral> first_frame(Pred&& pred) {
  for (Dihedral t : Dihedral::all())
    if (pred(t)) return t;
  return std::nullopt;
}

}  // namespace detail

inline std::optional<LConfiguration> find_L_configuration(const CellCollection& p) {
  const std::array<Point, 4> dirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  for (Cell c3 : p)
    for (Point e1 : dirs)
      for (Point e2 : dirs) {
        if (e1.x * e2.x + e1.y * e2.y != 0) continue;
        Cell c2{c3.lower_left + e1}, c1{c3.lower_left + e1 + e1};
        Cell c4{c3.lower_left + e2}, c5{c3.lower_left + e2 + e2};
        if (!p.contains(c1) || !p.contains(c2) || !p.contains(c4) || !p.contains(c5)) continue;
        LConfiguration w{{c1, c2, c3, c4, c5}, {}};
        w.frame = *detail::first_frame([&](Dihedral t) {
          Point a = t.apply(c1).lower_left, b = t.apply(c3).lower_left, c = t.apply(c5).lower_left;
          return a == b - Point{2, 0} && c == b + Point{0, 2};
        });
        return w;
      }
  return std::nullopt;
}

namespace detail {

inline Dihedral weak_l_frame(const WeakLConfiguration& w) {
  auto t = first_frame([&](Dihedral t) {
    Cell a = t.apply(w.ab.cells[0]), b = t.apply(w.ab.cells[1]);
    Cell c = t.apply(w.c), d = t.apply(w.df.first());
    return b.lower_left == a.lower_left + Point{1, 0} &&
           c.lower_left == a.lower_left + Point{-1, 1} && d.lower_left == b.lower_left + Point{0, 1};
  });
  if (!t) throw Error("unsupported orientation");
  return *t;
}

}  // namespace detail

inline std::optional<WeakLConfiguration> find_weak_L_configuration(
    const CellCollection& p, const ConfigurationOptions& opt = {}) {
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    const Point n = detail::normal_of(o);
    for (const Block& ab : maximal_blocks(p, o)) {
      if (ab.length() != 2) continue;
      const auto bv = ab.vertices();
      for (auto [c, touched] : detail::corner_contacts(p, ab, opt.weak_l_contact)) {
        const Point a1 = common_points(detail::cell_vertices(c), bv).front();
        auto a1_line = maximal_interval_through(p, a1, o);
        if (!a1_line) continue;
        for (Cell x : ab.cells)
          for (Point side : {n, Point{-n.x, -n.y}}) {
            Cell d{x.lower_left + side};
            Cell f{d.lower_left + side};
            if (!p.contains(d) || !p.contains(f) || d == c || f == c) continue;
            std::vector<Cell> run{d};
            for (Cell g = f; p.contains(g) && g != c; g = Cell{g.lower_left + side}) run.push_back(g);
            Block df = detail::make_block(other(o), run);
            auto contact = common_points(df.vertices(), bv);
            if (contact.size() != 2) continue;
            if (!a1_line->contains(contact[0]) || !a1_line->contains(contact[1])) continue;
            // A is the block cell away from [D, F].
            Block ordered = ab;
            if (ordered.cells[0] == x) std::swap(ordered.cells[0], ordered.cells[1]);
            WeakLConfiguration w{c, ordered, df, a1, contact[0], contact[1], {}};
            // [D, F] listed starting at D.
            if (w.df.cells.front() != d) std::reverse(w.df.cells.begin(), w.df.cells.end());
            w.frame = detail::weak_l_frame(w);
            return w;
          }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<std::pair<Point, Point>> two_point_contact(const Block& a, const Block& b) {
  auto common = common_points(a.vertices(), b.vertices());
  if (common.size() != 2) return std::nullopt;
  return std::pair{common[0], common[1]};
}

inline Dihedral ladder_frame(const Ladder& l) {
  const Block& last = l.blocks.back();
  const Block& prev = l.blocks[l.blocks.size() - 2];
  auto t = first_frame([&](Dihedral t) {
    Block bm = transform_block(last, t), bp = transform_block(prev, t);
    if (bm.orientation != Orientation::horizontal) return false;
    return bp.first().y() == bm.first().y() + 1 && bp.last().x() == bm.first().x();
  });
  if (!t) throw Error("unsupported orientation");
  return *t;
}

// In the reference position, the cell east of the last cell of B_{m-1} (north
// of the second cell of B_m) belongs to a hole.
inline bool hole_above_staircase(const std::vector<CellCollection>& holes, const Ladder& l) {
  const Dihedral t = l.frame;
  const Cell b = transform_block(l.blocks.back(), t).first();
  const Cell probe = t.inverse().apply(Cell{b.lower_left + Point{1, 1}});
  return std::any_of(holes.begin(), holes.end(),
                     [&](const CellCollection& h) { return h.contains(probe); });
}

class LadderSearch {
 public:
  LadderSearch(const CellCollection& p, Orientation o) : p_(p), blocks_(long_blocks(p, o)) {
    adj_.resize(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (std::size_t j = 0; j < blocks_.size(); ++j)
        if (i != j)
          if (auto c = two_point_contact(blocks_[i], blocks_[j])) adj_[i].push_back({j, *c});
  }

  /// Longest ladder (first found among equals) with at least `min_steps` blocks.
  std::optional<Ladder> best(std::size_t min_steps) {
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
      path_ = {s};
      contacts_.clear();
      used_.assign(blocks_.size(), 0);
      used_[s] = 1;
      grow();
    }
    if (best_.size() < min_steps || best_.empty()) return std::nullopt;
    Ladder l;
    for (std::size_t k : best_) l.blocks.push_back(blocks_[k]);
    l.contacts = best_contacts_;
    return l;
  }

 private:
  void grow() {
    if (path_.size() > best_.size()) {
      best_ = path_;
      best_contacts_ = contacts_;
    }
    for (const auto& [j, c] : adj_[path_.back()]) {
      if (used_[j]) continue;
      if (!contacts_.empty() && same_edge_interval(p_, contacts_.back(), c)) continue;
      used_[j] = 1;
      path_.push_back(j);
      contacts_.push_back(c);
      grow();
      contacts_.pop_back();
      path_.pop_back();
      used_[j] = 0;
    }
  }

  const CellCollection& p_;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::pair<std::size_t, std::pair<Point, Point>>>> adj_;
  std::vector<std::size_t> path_, best_;
  std::vector<std::pair<Point, Point>> contacts_, best_contacts_;
  std::vector<char> used_;
};

}  // namespace detail

/// A maximal ladder with at least `min_steps` blocks.
inline std::optional<Ladder> find_ladder(const CellCollection& p, std::size_t min_steps) {
  if (min_steps < 1) throw Error("min_steps must be positive");
  std::optional<Ladder> best;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    auto l = detail::LadderSearch(p, o).best(min_steps);
    if (l && (!best || l->steps() > best->steps())) best = std::move(l);
  }
  if (!best) return std::nullopt;
  auto reverse = [&] {
    std::reverse(best->blocks.begin(), best->blocks.end());
    std::reverse(best->contacts.begin(), best->contacts.end());
  };
  // B_1 is the block with the lesser first cell, unless the hole then sits on
  // the wrong side of the staircase in the reference position.
  if (best->blocks.back().first() < best->blocks.front().first()) reverse();
  if (best->steps() >= 2) {
    best->frame = detail::ladder_frame(*best);
    const auto hs = holes(p);
    if (!hs.empty() && !detail::hole_above_staircase(hs, *best)) {
      reverse();
      best->frame = detail::ladder_frame(*best);
    }
  }
  return best;
}

namespace detail {

inline std::optional<Dihedral> weak_ladder_frame(const WeakLadder& w) {
  return first_frame([&](Dihedral t) {
    Block b = transform_block(w.ab, t);
    if (b.orientation != Orientation::horizontal) return false;
    return t.apply(w.c).lower_left == b.first().lower_left + Point{-1, 1} &&
           t.apply(w.d).lower_left == b.last().lower_left - Point{0, 1};
  });
}

}  // namespace detail

inline std::optional<WeakLadder> find_weak_ladder(const CellCollection& p,
                                                  const ConfigurationOptions& opt = {}) {
  std::optional<WeakLadder> fallback;  // a witness with no reference position
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    const Point n = detail::normal_of(o);
    for (const Block& ab : detail::long_blocks(p, o)) {
      const auto bv = ab.vertices();
      for (auto [c, touched] : detail::corner_contacts(p, ab, opt.weak_ladder_contact)) {
        const Point a1 = common_points(detail::cell_vertices(c), bv).front();
        auto a1_line = maximal_interval_through(p, a1, o);
        for (Cell x : ab.cells)
          for (Point side : {n, Point{-n.x, -n.y}}) {
            Cell d{x.lower_left + side};
            if (!p.contains(d) || d == c || ab.contains(d)) continue;
            auto contact = common_points(detail::cell_vertices(d), bv);
            if (contact.size() != 2) continue;
            if (a1_line && a1_line->contains(contact[0]) && a1_line->contains(contact[1])) continue;
            WeakLadder w{c, d, ab, a1, contact[0], contact[1], Orientation::vertical, {}};
            auto t = detail::weak_ladder_frame(w);
            if (!t) {
              if (!fallback) fallback = w;
              continue;
            }
            {
              w.frame = *t;
              const Cell cr = w.frame.apply(c);
              const Dihedral back = w.frame.inverse();
              if (p.contains(back.apply(Cell{cr.lower_left + Point{0, 1}})))
                w.c_block = Orientation::vertical;
              else if (p.contains(back.apply(Cell{cr.lower_left - Point{1, 0}})))
                w.c_block = Orientation::horizontal;
            }
            return w;
          }
      }
    }
  }
  return fallback;
}

/// First configuration in the order L, weak L, ladder of >= 3 steps, weak ladder.
inline std::optional<ConfigurationWitness> find_any_prime_configuration(
    const CellCollection& p, const ConfigurationOptions& opt = {}) {
  if (auto w = find_L_configuration(p)) return ConfigurationWitness{*w};
  if (auto w = find_weak_L_configuration(p, opt)) return ConfigurationWitness{*w};
  if (auto w = find_ladder(p, 3)) return ConfigurationWitness{*w};
  if (auto w = find_weak_ladder(p, opt)) return ConfigurationWitness{*w};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Definitional re-checks, independent of the search code paths.

namespace detail {

inline bool is_block(const CellCollection& p, const Block& b) {
  if (b.cells.empty()) return false;
  const Point s = step_of(b.orientation);
  for (std::size_t i = 0; i < b.cells.size(); ++i) {
    if (!p.contains(b.cells[i])) return false;
    if (i > 0 && b.cells[i].lower_left != b.cells[i - 1].lower_left + s &&
        b.cells[i].lower_left != b.cells[i - 1].lower_left - s)
      return false;
  }
  return std::set<Cell>(b.cells.begin(), b.cells.end()).size() == b.cells.size();
}

inline bool is_maximal_block(const CellCollection& p, const Block& b) {
  if (!is_block(p, b)) return false;
  auto m = maximal_block_containing(p, b.cells.front(), b.orientation);
  return m.length() == b.length();
}

inline bool single_contact(const Cell& c, const Block& b, Point a1) {
  auto common = common_points(cell_vertices(c), b.vertices());
  return common.size() == 1 && common.front() == a1;
}

}  // namespace detail

inline bool verify_configuration(const CellCollection& p, const ConfigurationWitness& w) {
  using namespace detail;
  if (const auto* l = std::get_if<LConfiguration>(&w)) {
    const auto& c = l->cells;
    for (Cell x : c)
      if (!p.contains(x)) return false;
    if (std::set<Cell>(c.begin(), c.end()).size() != 5) return false;
    const Point e1 = c[1].lower_left - c[2].lower_left, e2 = c[3].lower_left - c[2].lower_left;
    if (std::abs(e1.x) + std::abs(e1.y) != 1 || std::abs(e2.x) + std::abs(e2.y) != 1) return false;
    if (e1.x * e2.x + e1.y * e2.y != 0) return false;
    return c[0].lower_left == c[1].lower_left + e1 && c[4].lower_left == c[3].lower_left + e2;
  }
  if (const auto* wl = std::get_if<WeakLConfiguration>(&w)) {
    if (wl->ab.length() != 2 || !is_maximal_block(p, wl->ab)) return false;
    if (wl->df.length() < 2 || !is_block(p, wl->df) || wl->df.orientation == wl->ab.orientation)
      return false;
    if (!p.contains(wl->c) || wl->ab.contains(wl->c)) return false;
    if (std::find(wl->df.cells.begin(), wl->df.cells.end(), wl->c) != wl->df.cells.end())
      return false;
    if (!single_contact(wl->c, wl->ab, wl->a1)) return false;
    auto contact = common_points(wl->df.vertices(), wl->ab.vertices());
    if (contact.size() != 2 || contact[0] == contact[1]) return false;
    if (std::vector<Point>{std::min(wl->a2, wl->b2), std::max(wl->a2, wl->b2)} != contact)
      return false;
    auto line = maximal_interval_through(p, wl->a1, wl->ab.orientation);
    return line && line->contains(wl->a2) && line->contains(wl->b2);
  }
  if (const auto* ld = std::get_if<Ladder>(&w)) {
    const auto& b = ld->blocks;
    if (b.size() < 2 || ld->contacts.size() + 1 != b.size()) return false;
    for (const auto& x : b)
      if (x.length() < 2 || !is_maximal_block(p, x) || x.orientation != b.front().orientation)
        return false;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      auto common = common_points(b[i].vertices(), b[i + 1].vertices());
      if (common.size() != 2) return false;
      auto [a, c] = ld->contacts[i];
      if (std::vector<Point>{std::min(a, c), std::max(a, c)} != common) return false;
    }
    for (std::size_t i = 0; i + 2 < b.size(); ++i)
      if (same_edge_interval(p, ld->contacts[i], ld->contacts[i + 1])) return false;
    return true;
  }
  const auto& wk = std::get<WeakLadder>(w);
  if (wk.ab.length() < 2 || !is_maximal_block(p, wk.ab)) return false;
  if (!p.contains(wk.c) || !p.contains(wk.d) || wk.c == wk.d) return false;
  if (wk.ab.contains(wk.c) || wk.ab.contains(wk.d)) return false;
  if (!single_contact(wk.c, wk.ab, wk.a1)) return false;
  auto contact = common_points(cell_vertices(wk.d), wk.ab.vertices());
  if (contact.size() != 2) return false;
  if (std::vector<Point>{std::min(wk.a2, wk.b2), std::max(wk.a2, wk.b2)} != contact) return false;
  auto line = maximal_interval_through(p, wk.a1, wk.ab.orientation);
  return !(line && line->contains(wk.a2) && line->contains(wk.b2));
}

// ---------------------------------------------------------------------------
// Marked sets for the hole-marked toric map, computed in the reference position
// and carried back.

namespace detail {

inline std::vector<Point> sorted_unique(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<Point> map_points(const std::vector<Point>& pts, Dihedral t) {
  std::vector<Point> out;
  for (Point q : pts) out.push_back(t.apply(q));
  return sorted_unique(std::move(out));
}

inline Point lower_left(Cell c) { return c.lower_left; }
inline Point upper_right(Cell c) { return c.upper_right(); }

}  // namespace detail

inline std::vector<Point> marked_set_for_configuration(const CellCollection& p,
                                                       const ConfigurationWitness& w) {
  using namespace detail;
  if (const auto* l = std::get_if<LConfiguration>(&w)) return cell_vertices(l->cells[2]);
  if (const auto* wl = std::get_if<WeakLConfiguration>(&w)) {
    // B is the cell of [A, B] next to [D, F].
    for (Cell x : wl->ab.cells)
      if (edge_adjacent(x, wl->df.first())) return cell_vertices(x);
    throw Error("unsupported orientation");
  }
  if (const auto* ld = std::get_if<Ladder>(&w)) {
    if (ld->steps() < 2) throw Error("unsupported orientation");
    const Dihedral t = ld->frame;
    Block bm = transform_block(ld->blocks.back(), t);
    Block bp = transform_block(ld->blocks[ld->blocks.size() - 2], t);
    if (bm.orientation != Orientation::horizontal || bp.first().y() != bm.first().y() + 1 ||
        bp.last().x() != bm.first().x())
      throw Error("unsupported orientation");
    std::vector<Point> pts;
    for (Cell b : bp.cells) pts.push_back(b.lower_left);  // b_1, ..., b_n
    for (Point q : bm.first().corners()) pts.push_back(q);  // a, b, d (and b_n)
    return map_points(pts, t.inverse());
  }
  const auto& wk = std::get<WeakLadder>(w);
  auto t = weak_ladder_frame(wk);
  if (!t) throw Error("unsupported orientation");
  const Cell c = t->apply(wk.c);
  const Block b = transform_block(wk.ab, *t);
  const Point v_h = t->apply(wk.a1);
  std::vector<Point> pts{v_h};
  const Dihedral back = t->inverse();
  if (p.contains(back.apply(Cell{c.lower_left + Point{0, 1}}))) {
    pts.push_back(c.lower_left);
    pts.push_back(b.first().lower_left);
  } else if (p.contains(back.apply(Cell{c.lower_left - Point{1, 0}}))) {
    pts.push_back(c.upper_right());
    for (Cell x : b.cells) pts.push_back(x.upper_right());
  } else {
    throw Error("unsupported orientation");
  }
  return map_points(pts, back);
}

}  // namespace polyideal
