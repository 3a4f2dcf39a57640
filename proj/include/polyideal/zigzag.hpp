// Zig-zag walks: verification and a bounded exhaustive search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grid.hpp"

namespace polyideal {

// Answers "is there an inner interval J with p, q ∈ V(J)", where V(J) is every
// lattice point of J. Inner intervals are closed under proper sub-intervals, so
// it is enough to look at the hull of p and q, or at the thinnest proper
// intervals around it when the hull is a segment or a point.
class CoInnerTable {
 public:
  explicit CoInnerTable(const CellCollection& p) : lo_(p.bounding_box().lo) {
    const auto box = p.bounding_box();
    w_ = box.width();
    h_ = box.height();
    prefix_.assign(static_cast<std::size_t>(w_ + 1) * (h_ + 1), 0);
    for (int y = 0; y < h_; ++y)
      for (int x = 0; x < w_; ++x) {
        int in = p.contains(lo_.x + x, lo_.y + y) ? 1 : 0;
        at(x + 1, y + 1) = in + at(x, y + 1) + at(x + 1, y) - at(x, y);
      }
  }

  /// All cells of the proper interval [a, b] belong to the collection.
  bool inner(Point a, Point b) const {
    if (a.x >= b.x || a.y >= b.y) return false;
    int x0 = a.x - lo_.x, y0 = a.y - lo_.y, x1 = b.x - lo_.x, y1 = b.y - lo_.y;
    if (x0 < 0 || y0 < 0 || x1 > w_ || y1 > h_) return false;
    int count = at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
    return count == (x1 - x0) * (y1 - y0);
  }

  bool operator()(Point p, Point q) const {
    const LatticeInterval hh = hull(p, q);
    const Point a = hh.lo, b = hh.hi;
    if (a.x < b.x && a.y < b.y) return inner(a, b);
    if (a.y == b.y && a.x < b.x)
      return inner({a.x, a.y - 1}, {b.x, b.y}) || inner({a.x, a.y}, {b.x, b.y + 1});
    if (a.x == b.x && a.y < b.y)
      return inner({a.x - 1, a.y}, {b.x, b.y}) || inner({a.x, a.y}, {b.x + 1, b.y});
    return inner(a - Point{1, 1}, a) || inner(a - Point{0, 1}, a + Point{1, 0}) ||
           inner(a - Point{1, 0}, a + Point{0, 1}) || inner(a, a + Point{1, 1});
  }

 private:
  int& at(int x, int y) { return prefix_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }
  int at(int x, int y) const { return prefix_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }

  Point lo_;
  int w_ = 0;
  int h_ = 0;
  std::vector<int> prefix_;
};

inline bool co_inner(const CellCollection& p, Point a, Point b) { return CoInnerTable(p)(a, b); }

// One interval of a walk with its corner labelling: {v_entry, z} is one
// diagonal pair and {u, v_exit} the other.
struct OrientedStep {
  enum class Mode { diag_entry, antidiag_entry };

  LatticeInterval interval;
  Point v_entry;
  Point v_exit;
  Point z;
  Point u;
  Mode mode = Mode::diag_entry;

  static OrientedStep make(const LatticeInterval& i, Point v_entry, Point v_exit) {
    OrientedStep s;
    s.interval = i;
    s.v_entry = v_entry;
    s.v_exit = v_exit;
    s.z = i.opposite(v_entry);
    s.u = i.opposite(v_exit);
    s.mode = (v_entry == i.lo || v_entry == i.hi) ? Mode::diag_entry : Mode::antidiag_entry;
    return s;
  }

  /// Corners are labelled consistently with the interval.
  bool well_formed() const {
    const auto& i = interval;
    if (!i.proper() || !i.is_corner(v_entry) || !i.is_corner(v_exit)) return false;
    if (v_entry == v_exit || i.opposite(v_entry) == v_exit) return false;
    return z == i.opposite(v_entry) && u == i.opposite(v_exit);
  }

  friend bool operator==(const OrientedStep&, const OrientedStep&) = default;
};

/// The eight labellings of an interval.
inline std::vector<OrientedStep> oriented_steps(const LatticeInterval& i) {
  std::vector<OrientedStep> out;
  for (Point v : i.corners())
    for (Point w : i.corners())
      if (v != w && w != i.opposite(v)) out.push_back(OrientedStep::make(i, v, w));
  return out;
}

struct ZigZagWalk {
  std::vector<OrientedStep> steps;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const ZigZagWalk&, const ZigZagWalk&) = default;
};

namespace detail {

inline bool meets_in_single_point(const LatticeInterval& a, const LatticeInterval& b, Point p) {
  auto r = intersect(a, b);
  return r && r->lo == p && r->hi == p;
}

}  // namespace detail

inline bool verify_zigzag_walk(const CellCollection& p, const ZigZagWalk& w) {
  const auto& s = w.steps;
  const std::size_t l = s.size();
  if (l < 2) return false;
  for (const auto& st : s)
    if (!st.well_formed() || !is_inner_interval(p, st.interval)) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (s[i].interval == s[j].interval) return false;
  // Condition (1): consecutive intervals meet exactly in the hand-over corner.
  for (std::size_t i = 0; i < l; ++i) {
    const auto& a = s[i];
    const auto& b = s[(i + 1) % l];
    if (a.v_exit != b.v_entry) return false;
    if (!detail::meets_in_single_point(a.interval, b.interval, b.v_entry)) return false;
  }
  // Condition (2): v_i and v_{i+1} share a maximal edge interval.
  for (const auto& st : s)
    if (!on_common_maximal_interval(p, st.v_entry, st.v_exit)) return false;
  // Condition (3).
  CoInnerTable table(p);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (table(s[i].z, s[j].z)) return false;
  return true;
}

enum class SearchStatus { found, none, inconclusive };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct ZigZagSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<ZigZagWalk> walk;
  std::size_t nodes = 0;
  std::size_t max_len = 0;
};

inline std::size_t default_max_len(const CellCollection& p) {
  return 2 * (maximal_edge_intervals(p, Orientation::horizontal).size() +
              maximal_edge_intervals(p, Orientation::vertical).size());
}

inline constexpr std::size_t kDefaultNodeBudget = 50'000'000;

namespace detail {

// Depth-first search over oriented steps. The first interval of a walk is the
// least one it uses (every rotation of a walk is a walk), so each start only
// extends through intervals of larger index.
class ZigZagSearch {
 public:
  ZigZagSearch(const CellCollection& p, std::size_t max_len, std::size_t budget)
      : p_(p), table_(p), max_len_(max_len), budget_(budget) {
    intervals_ = inner_intervals(p);
    for (std::size_t k = 0; k < intervals_.size(); ++k)
      for (Point c : intervals_[k].corners()) by_corner_[c].push_back(k);
    used_.assign(intervals_.size(), 0);
  }

  ZigZagSearchResult run() {
    ZigZagSearchResult out;
    out.max_len = max_len_;
    for (start_ = 0; start_ < intervals_.size() && !found_ && !exhausted_; ++start_) {
      for (const auto& st : oriented_steps(intervals_[start_])) {
        if (!on_common_maximal_interval(p_, st.v_entry, st.v_exit)) continue;
        used_[start_] = 1;
        path_.push_back(st);
        extend();
        path_.pop_back();
        used_[start_] = 0;
        if (found_ || exhausted_) break;
      }
    }
    out.nodes = nodes_;
    if (found_) {
      out.status = SearchStatus::found;
      out.walk = ZigZagWalk{walk_};
    } else {
      out.status = exhausted_ ? SearchStatus::inconclusive : SearchStatus::none;
    }
    return out;
  }

 private:
  void extend() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const OrientedStep& last = path_.back();
    const Point v = last.v_exit;
    auto it = by_corner_.find(v);
    if (it == by_corner_.end()) return;
    for (std::size_t k : it->second) {
      if (k < start_ || (used_[k] && !(k == start_ && path_.size() >= 3))) continue;
      const LatticeInterval& next = intervals_[k];
      if (!meets_in_single_point(last.interval, next, v)) continue;
      if (k == start_) {
        // Closing: the walk returns to its first interval through v_1.
        if (v != path_.front().v_entry) continue;
        walk_ = path_;
        found_ = true;
        return;
      }
      if (path_.size() >= max_len_) continue;
      for (Point w : next.corners()) {
        if (w == v || w == next.opposite(v)) continue;
        OrientedStep st = OrientedStep::make(next, v, w);
        if (!z_compatible(st.z)) continue;
        if (!on_common_maximal_interval(p_, v, w)) continue;
        used_[k] = 1;
        path_.push_back(st);
        extend();
        path_.pop_back();
        used_[k] = 0;
        if (found_ || exhausted_) return;
      }
    }
  }

  bool z_compatible(Point z) const {
    for (const auto& st : path_)
      if (table_(st.z, z)) return false;
    return true;
  }

  const CellCollection& p_;
  CoInnerTable table_;
  std::size_t max_len_;
  std::size_t budget_;
  std::vector<LatticeInterval> intervals_;
  std::map<Point, std::vector<std::size_t>> by_corner_;
  std::vector<char> used_;
  std::vector<OrientedStep> path_;
  std::vector<OrientedStep> walk_;
  std::size_t start_ = 0;
  std::size_t nodes_ = 0;
  bool found_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

/// Searches walks of length at most `max_len` (0 selects the default bound).
inline ZigZagSearchResult find_zigzag_walk(const CellCollection& p, std::size_t max_len = 0,
                                           std::size_t node_budget = kDefaultNodeBudget) {
  if (max_len == 0) max_len = default_max_len(p);
  if (max_len < 2) throw Error("max_len must be at least 2");
  return detail::ZigZagSearch(p, max_len, node_budget).run();
}

/// One line per step: lo.x lo.y hi.x hi.y v.x v.y z.x z.y
inline std::string to_text(const ZigZagWalk& w) {
  std::ostringstream os;
  for (const auto& s : w.steps)
    os << s.interval.lo.x << ' ' << s.interval.lo.y << ' ' << s.interval.hi.x << ' '
       << s.interval.hi.y << ' ' << s.v_entry.x << ' ' << s.v_entry.y << ' ' << s.z.x << ' '
       << s.z.y << '\n';
  return os.str();
}

/// Inverse of to_text; v_exit of a step is v_entry of the next one.
inline ZigZagWalk walk_from_text(const std::string& text) {
  std::istringstream is(text);
  struct Row {
    LatticeInterval i;
    Point v, z;
  };
  std::vector<int> nums;
  for (int k; is >> k;) nums.push_back(k);
  if (!is.eof() || nums.size() % 8 != 0) throw Error("malformed walk text");
  std::vector<Row> rows;
  for (std::size_t k = 0; k < nums.size(); k += 8)
    rows.push_back({{{nums[k], nums[k + 1]}, {nums[k + 2], nums[k + 3]}},
                    {nums[k + 4], nums[k + 5]},
                    {nums[k + 6], nums[k + 7]}});
  ZigZagWalk w;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    const Point exit = rows[(k + 1) % rows.size()].v;
    if (!row.i.proper() || !row.i.is_corner(row.v) || !row.i.is_corner(exit))
      throw Error("walk step corners do not fit its interval");
    auto st = OrientedStep::make(row.i, row.v, exit);
    if (st.z != row.z) throw Error("walk step z does not match its entry corner");
    w.steps.push_back(st);
  }
  return w;
}

}  // namespace polyideal
