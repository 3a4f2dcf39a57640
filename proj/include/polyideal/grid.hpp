// Integer-lattice geometry for finite collections of unit cells.
//
// Cells are identified by their lower-left corner. A CellCollection keeps its
// cells sorted by (y, x) so every list produced here is reproducible.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyideal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr std::strong_ordering operator<=>(Point a, Point b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

struct Cell {
  Point lower_left;

  constexpr Cell() = default;
  constexpr explicit Cell(Point p) : lower_left(p) {}
  constexpr Cell(int x, int y) : lower_left{x, y} {}

  constexpr int x() const { return lower_left.x; }
  constexpr int y() const { return lower_left.y; }

  /// Corners in (y, x) order: lower-left, lower-right, upper-left, upper-right.
  constexpr std::array<Point, 4> corners() const {
    const Point a = lower_left;
    return {a, a + Point{1, 0}, a + Point{0, 1}, a + Point{1, 1}};
  }
  constexpr Point upper_right() const { return lower_left + Point{1, 1}; }

  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell a, Cell b) { return a.lower_left <=> b.lower_left; }
};

inline std::string to_string(Cell c) { return to_string(c.lower_left); }

enum class Orientation { horizontal, vertical };

inline const char* to_string(Orientation o) {
  return o == Orientation::horizontal ? "horizontal" : "vertical";
}

constexpr Orientation other(Orientation o) {
  return o == Orientation::horizontal ? Orientation::vertical : Orientation::horizontal;
}

struct LatticeInterval {
  Point lo;
  Point hi;

  constexpr bool proper() const { return lo.x < hi.x && lo.y < hi.y; }
  constexpr bool contains(Point p) const {
    return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
  }
  constexpr int width() const { return hi.x - lo.x; }
  constexpr int height() const { return hi.y - lo.y; }
  constexpr std::array<Point, 2> diagonal_corners() const { return {lo, hi}; }
  constexpr std::array<Point, 2> anti_diagonal_corners() const {
    return {Point{lo.x, hi.y}, Point{hi.x, lo.y}};
  }
  constexpr std::array<Point, 4> corners() const {
    return {lo, Point{hi.x, lo.y}, Point{lo.x, hi.y}, hi};
  }
  constexpr bool is_corner(Point p) const {
    return (p.x == lo.x || p.x == hi.x) && (p.y == lo.y || p.y == hi.y);
  }
  /// The corner diagonally opposite to `p` (p must be a corner).
  constexpr Point opposite(Point p) const {
    return {p.x == lo.x ? hi.x : lo.x, p.y == lo.y ? hi.y : lo.y};
  }

  friend constexpr bool operator==(const LatticeInterval&, const LatticeInterval&) = default;
  friend constexpr auto operator<=>(const LatticeInterval& a, const LatticeInterval& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    return a.hi <=> b.hi;
  }
};

/// Smallest interval containing both points.
constexpr LatticeInterval hull(Point a, Point b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

/// Lattice points common to two intervals, or nullopt when disjoint.
constexpr std::optional<LatticeInterval> intersect(const LatticeInterval& a,
                                                   const LatticeInterval& b) {
  LatticeInterval r{{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)},
                    {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)}};
  if (r.lo.x > r.hi.x || r.lo.y > r.hi.y) return std::nullopt;
  return r;
}

inline std::string to_string(const LatticeInterval& i) {
  return "[" + to_string(i.lo) + "," + to_string(i.hi) + "]";
}

// A run of unit edges on one grid line. For horizontal intervals `line` is the
// y coordinate and [lo, hi] the x range; for vertical ones the roles swap.
struct EdgeInterval {
  Orientation orientation = Orientation::horizontal;
  int line = 0;
  int lo = 0;
  int hi = 0;
  bool maximal = false;

  constexpr bool contains(Point p) const {
    if (orientation == Orientation::horizontal) return p.y == line && lo <= p.x && p.x <= hi;
    return p.x == line && lo <= p.y && p.y <= hi;
  }
  constexpr Point start() const {
    return orientation == Orientation::horizontal ? Point{lo, line} : Point{line, lo};
  }
  constexpr Point end() const {
    return orientation == Orientation::horizontal ? Point{hi, line} : Point{line, hi};
  }
  constexpr int length() const { return hi - lo; }

  friend constexpr bool operator==(const EdgeInterval&, const EdgeInterval&) = default;
};

/// Common point of a vertical and a horizontal interval, if they cross.
constexpr std::optional<Point> crossing(const EdgeInterval& v, const EdgeInterval& h) {
  if (v.orientation != Orientation::vertical || h.orientation != Orientation::horizontal)
    return std::nullopt;
  Point p{v.line, h.line};
  if (v.contains(p) && h.contains(p)) return p;
  return std::nullopt;
}

struct Block {
  Orientation orientation = Orientation::horizontal;
  std::vector<Cell> cells;
  bool maximal = false;

  std::size_t length() const { return cells.size(); }
  const Cell& first() const { return cells.front(); }
  const Cell& last() const { return cells.back(); }
  bool contains(Cell c) const { return std::find(cells.begin(), cells.end(), c) != cells.end(); }

  std::vector<Point> vertices() const {
    std::vector<Point> out;
    out.reserve(2 * cells.size() + 2);
    for (Cell c : cells)
      for (Point p : c.corners()) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Block&, const Block&) = default;
};

class CellCollection {
 public:
  CellCollection() = default;

  explicit CellCollection(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    if (cells_.empty()) throw Error("empty collection");
    vertices_.reserve(4 * cells_.size());
    lo_ = hi_ = cells_.front().lower_left;
    for (Cell c : cells_) {
      for (Point p : c.corners()) vertices_.push_back(p);
      lo_.x = std::min(lo_.x, c.x());
      lo_.y = std::min(lo_.y, c.y());
      hi_.x = std::max(hi_.x, c.x());
      hi_.y = std::max(hi_.y, c.y());
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  CellCollection(std::initializer_list<std::pair<int, int>> xy)
      : CellCollection(to_cells(xy)) {}

  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
  bool contains(int x, int y) const { return contains(Cell{x, y}); }
  bool has_vertex(Point p) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), p);
  }

  const std::vector<Point>& vertex_set() const { return vertices_; }

  /// Lattice interval spanned by all cells (corner to corner).
  LatticeInterval bounding_box() const { return {lo_, hi_ + Point{1, 1}}; }
  /// Lower-left corners of the extreme cells.
  Point min_cell() const { return lo_; }
  Point max_cell() const { return hi_; }

  friend bool operator==(const CellCollection& a, const CellCollection& b) {
    return a.cells_ == b.cells_;
  }
  friend auto operator<=>(const CellCollection& a, const CellCollection& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  static std::vector<Cell> to_cells(std::initializer_list<std::pair<int, int>> xy) {
    std::vector<Cell> out;
    for (auto [x, y] : xy) out.emplace_back(x, y);
    return out;
  }

  std::vector<Cell> cells_;
  std::vector<Point> vertices_;
  Point lo_{};
  Point hi_{};
};

inline std::vector<Point> vertices(const CellCollection& p) {
  if (p.empty()) throw Error("empty collection");
  return p.vertex_set();
}

namespace detail {

constexpr std::array<Point, 4> kEdgeSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<Point, 8> kVertexSteps{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

// Dense occupancy map over a rectangle of cells; used for flood fills.
class CellGrid {
 public:
  CellGrid(Point lo, Point hi) : lo_(lo), w_(hi.x - lo.x + 1), h_(hi.y - lo.y + 1) {
    data_.assign(static_cast<std::size_t>(w_) * h_, 0);
  }
  bool inside(Point c) const {
    return c.x >= lo_.x && c.y >= lo_.y && c.x < lo_.x + w_ && c.y < lo_.y + h_;
  }
  unsigned char& at(Point c) {
    return data_[static_cast<std::size_t>(c.y - lo_.y) * w_ + (c.x - lo_.x)];
  }
  Point lo() const { return lo_; }
  int width() const { return w_; }
  int height() const { return h_; }

 private:
  Point lo_;
  int w_;
  int h_;
  std::vector<unsigned char> data_;
};

template <std::size_t N>
std::vector<CellCollection> components(const std::vector<Cell>& cells,
                                       const std::array<Point, N>& steps) {
  std::vector<CellCollection> out;
  if (cells.empty()) return out;
  std::vector<char> seen(cells.size(), 0);
  auto index_of = [&](Point p) -> std::ptrdiff_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), Cell{p});
    if (it == cells.end() || it->lower_left != p) return -1;
    return it - cells.begin();
  };
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Cell> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      comp.push_back(cells[i]);
      for (Point d : steps) {
        auto j = index_of(cells[i].lower_left + d);
        if (j >= 0 && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = 1;
          queue.push_back(static_cast<std::size_t>(j));
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const CellCollection& a, const CellCollection& b) {
              return a.cells().front() < b.cells().front();
            });
  return out;
}

}  // namespace detail

/// Edge-adjacency components; each one is a polyomino.
inline std::vector<CellCollection> connected_components(const CellCollection& p) {
  return detail::components(p.cells(), detail::kEdgeSteps);
}

inline bool is_polyomino(const CellCollection& p) {
  return !p.empty() && connected_components(p).size() == 1;
}

/// Connectivity where cells sharing only a corner count as neighbours.
inline bool is_weakly_connected(const CellCollection& p) {
  return !p.empty() && detail::components(p.cells(), detail::kVertexSteps).size() == 1;
}

/// Bounded components of the complement, ordered by their least cell.
inline std::vector<CellCollection> holes(const CellCollection& p) {
  if (p.empty()) throw Error("empty collection");
  const Point lo = p.min_cell() - Point{1, 1};
  const Point hi = p.max_cell() + Point{1, 1};
  detail::CellGrid grid(lo, hi);
  for (Cell c : p) grid.at(c.lower_left) = 1;
  // 2 marks complement cells reachable from the inflated border.
  std::deque<Point> queue{lo};
  grid.at(lo) = 2;
  while (!queue.empty()) {
    Point c = queue.front();
    queue.pop_front();
    for (Point d : detail::kEdgeSteps) {
      Point n = c + d;
      if (grid.inside(n) && grid.at(n) == 0) {
        grid.at(n) = 2;
        queue.push_back(n);
      }
    }
  }
  std::vector<Cell> enclosed;
  for (int y = lo.y; y <= hi.y; ++y)
    for (int x = lo.x; x <= hi.x; ++x)
      if (grid.at({x, y}) == 0) enclosed.emplace_back(x, y);
  return detail::components(enclosed, detail::kEdgeSteps);
}

inline bool is_simple(const CellCollection& p) { return holes(p).empty(); }

/// True when the unit segment from `a` to a lattice neighbour `b` is an edge of some cell.
inline bool has_unit_edge(const CellCollection& p, Point a, Point b) {
  if (b < a) std::swap(a, b);
  if (a.y == b.y && b.x == a.x + 1) return p.contains(Cell{a}) || p.contains(Cell{a - Point{0, 1}});
  if (a.x == b.x && b.y == a.y + 1) return p.contains(Cell{a}) || p.contains(Cell{a - Point{1, 0}});
  return false;
}

/// True when [a, b] is a horizontal or vertical edge interval (a != b, every unit edge present).
inline bool is_edge_interval(const CellCollection& p, Point a, Point b) {
  if (a == b || (a.x != b.x && a.y != b.y)) return false;
  if (b < a) std::swap(a, b);
  const Point step = a.y == b.y ? Point{1, 0} : Point{0, 1};
  for (Point q = a; q != b; q = q + step)
    if (!has_unit_edge(p, q, q + step)) return false;
  return true;
}

inline std::vector<EdgeInterval> maximal_edge_intervals(const CellCollection& p, Orientation o) {
  if (p.empty()) throw Error("empty collection");
  // (line, start) of every unit edge of the requested orientation.
  std::vector<std::pair<int, int>> units;
  units.reserve(2 * p.size());
  for (Cell c : p) {
    if (o == Orientation::horizontal) {
      units.emplace_back(c.y(), c.x());
      units.emplace_back(c.y() + 1, c.x());
    } else {
      units.emplace_back(c.x(), c.y());
      units.emplace_back(c.x() + 1, c.y());
    }
  }
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  std::vector<EdgeInterval> out;
  for (auto [line, start] : units) {
    if (!out.empty() && out.back().line == line && out.back().hi == start) {
      out.back().hi = start + 1;
    } else {
      out.push_back(EdgeInterval{o, line, start, start + 1, true});
    }
  }
  return out;
}

/// The maximal interval of orientation `o` through `q`, if any edge of that orientation touches it.
inline std::optional<EdgeInterval> maximal_interval_through(const CellCollection& p, Point q,
                                                            Orientation o) {
  const Point step = o == Orientation::horizontal ? Point{1, 0} : Point{0, 1};
  Point a = q, b = q;
  while (has_unit_edge(p, a - step, a)) a = a - step;
  while (has_unit_edge(p, b, b + step)) b = b + step;
  if (a == b) return std::nullopt;
  if (o == Orientation::horizontal) return EdgeInterval{o, q.y, a.x, b.x, true};
  return EdgeInterval{o, q.x, a.y, b.y, true};
}

/// Whether two lattice points lie on one common maximal edge interval.
inline bool on_common_maximal_interval(const CellCollection& p, Point a, Point b) {
  if (a == b) {
    return maximal_interval_through(p, a, Orientation::horizontal).has_value() ||
           maximal_interval_through(p, a, Orientation::vertical).has_value();
  }
  return is_edge_interval(p, a, b);
}

/// Unit cells of a proper interval, in (y, x) order.
inline std::vector<Cell> cells_of_interval(const LatticeInterval& i) {
  if (!i.proper()) throw Error("degenerate interval");
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(i.width()) * i.height());
  for (int y = i.lo.y; y < i.hi.y; ++y)
    for (int x = i.lo.x; x < i.hi.x; ++x) out.emplace_back(x, y);
  return out;
}

inline bool is_inner_interval(const CellCollection& p, const LatticeInterval& i) {
  if (!i.proper()) return false;
  for (int y = i.lo.y; y < i.hi.y; ++y)
    for (int x = i.lo.x; x < i.hi.x; ++x)
      if (!p.contains(x, y)) return false;
  return true;
}

/// All proper intervals whose cells lie in `p`, ordered by (lo, hi).
inline std::vector<LatticeInterval> inner_intervals(const CellCollection& p) {
  if (p.empty()) throw Error("empty collection");
  std::vector<LatticeInterval> out;
  for (Cell c : p) {
    int max_width = 0;
    while (p.contains(c.x() + max_width, c.y())) ++max_width;
    for (int h = 1; max_width > 0; ++h) {
      for (int w = 1; w <= max_width; ++w)
        out.push_back({c.lower_left, c.lower_left + Point{w, h}});
      int row = 0;
      while (row < max_width && p.contains(c.x() + row, c.y() + h)) ++row;
      max_width = row;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Block> maximal_blocks(const CellCollection& p, Orientation o) {
  if (p.empty()) throw Error("empty collection");
  const Point step = o == Orientation::horizontal ? Point{1, 0} : Point{0, 1};
  std::vector<Block> out;
  for (Cell c : p) {
    if (p.contains(Cell{c.lower_left - step})) continue;
    Block b{o, {}, true};
    for (Point q = c.lower_left; p.contains(Cell{q}); q = q + step) b.cells.emplace_back(q);
    out.push_back(std::move(b));
  }
  return out;
}

/// The maximal block of orientation `o` containing `c` (c must be in p).
inline Block maximal_block_containing(const CellCollection& p, Cell c, Orientation o) {
  const Point step = o == Orientation::horizontal ? Point{1, 0} : Point{0, 1};
  Point q = c.lower_left;
  while (p.contains(Cell{q - step})) q = q - step;
  Block b{o, {}, true};
  for (; p.contains(Cell{q}); q = q + step) b.cells.emplace_back(q);
  return b;
}

/// Points common to two sorted point lists.
inline std::vector<Point> common_points(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Point> corner_list(Cell c) {
  auto k = c.corners();
  return {k.begin(), k.end()};
}

/// Translate so the least x and least y over all cells become 0.
inline CellCollection canonicalize(const CellCollection& p) {
  const Point lo = p.min_cell();
  if (lo == Point{0, 0}) return p;
  std::vector<Cell> out;
  out.reserve(p.size());
  for (Cell c : p) out.emplace_back(c.lower_left - lo);
  return CellCollection(std::move(out));
}

// The eight symmetries of the square lattice. Index t encodes an optional
// mirror x -> -x (t >= 4) followed by (t % 4) quarter turns counter-clockwise.
struct Dihedral {
  int index = 0;

  constexpr Point apply(Point p) const {
    if (index >= 4) p.x = -p.x;
    for (int r = 0; r < index % 4; ++r) p = {-p.y, p.x};
    return p;
  }
  constexpr Cell apply(Cell c) const {
    auto k = c.corners();
    Point lo = apply(k[0]);
    for (int i = 1; i < 4; ++i) {
      Point q = apply(k[i]);
      lo.x = std::min(lo.x, q.x);
      lo.y = std::min(lo.y, q.y);
    }
    return Cell{lo};
  }
  constexpr Dihedral inverse() const {
    if (index >= 4) return *this;  // reflections are involutions
    return {(4 - index) % 4};
  }
  /// Image of an axis direction vector.
  constexpr Point apply_direction(Point d) const { return apply(d); }

  static constexpr std::array<Dihedral, 8> all() {
    return {{{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}}};
  }
  friend constexpr bool operator==(Dihedral, Dihedral) = default;
};

inline CellCollection transform(const CellCollection& p, Dihedral t) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (Cell c : p) out.push_back(t.apply(c));
  return CellCollection(std::move(out));
}

}  // namespace polyideal
