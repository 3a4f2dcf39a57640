// Degree-by-degree comparison of I_P with the kernel of a monomial map. The
// degree-k part of an ideal generated by pure differences x^a - x^b is spanned
// by differences of monomials joined by a chain of generator moves, so
// u - v lies in I_P exactly when u and v share a component of the move graph.

#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "brute_grid.hpp"

namespace oracle {

using Image = std::map<int, int>;  // target variable -> exponent

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline void multisets(std::size_t n, unsigned k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < static_cast<int>(n); ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Target variables: vertical run (1, x, lowest y), horizontal run (2, y, lowest x), hole w (3).
inline std::map<XY, Image> edge_ring_images(const Cells& c, const std::set<XY>& marked = {}) {
  std::map<std::tuple<int, int, int>, int> ids;
  auto id = [&](int kind, int a, int b) {
    auto [it, fresh] = ids.emplace(std::tuple{kind, a, b}, static_cast<int>(ids.size()));
    return it->second;
  };
  std::map<XY, Image> out;
  for (XY p : vertices(c)) {
    XY low = p;
    while (unit_edge(c, {low.first, low.second - 1}, low)) --low.second;
    XY left = p;
    while (unit_edge(c, {left.first - 1, left.second}, left)) --left.first;
    Image img;
    img[id(1, low.first, low.second)] += 1;
    img[id(2, left.second, left.first)] += 1;
    if (marked.count(p)) img[id(3, 0, 0)] += 1;
    out[p] = img;
  }
  return out;
}

struct Comparison {
  bool minors_in_kernel = true;
  bool kernel_in_ideal = true;
  bool passed() const { return minors_in_kernel && kernel_in_ideal; }
};

inline Comparison compare(const Cells& c, const std::map<XY, Image>& images, unsigned d) {
  std::vector<XY> vars;
  for (const auto& [p, img] : images) vars.push_back(p);
  auto index = [&](XY p) { return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), p) - vars.begin()); };
  auto image_of = [&](const std::vector<int>& mono) {
    Image out;
    for (int i : mono)
      for (auto [t, e] : images.at(vars[static_cast<std::size_t>(i)])) out[t] += e;
    return out;
  };
  struct Minor {
    std::vector<int> plus, minus;
  };
  std::vector<Minor> minors;
  Comparison r;
  for (const auto& rect : inner_intervals(c)) {
    Minor m{{index(rect.lo), index(rect.hi)},
            {index({rect.hi.first, rect.lo.second}), index({rect.lo.first, rect.hi.second})}};
    std::sort(m.plus.begin(), m.plus.end());
    std::sort(m.minus.begin(), m.minus.end());
    if (image_of(m.plus) != image_of(m.minus)) r.minors_in_kernel = false;
    minors.push_back(m);
  }
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<std::vector<int>> monos;
    multisets(vars.size(), k, monos);
    std::map<std::vector<int>, std::size_t> at;
    for (std::size_t i = 0; i < monos.size(); ++i) at[monos[i]] = i;
    UnionFind uf(monos.size());
    if (k >= 2) {
      std::vector<std::vector<int>> mult;
      multisets(vars.size(), k - 2, mult);
      for (const auto& m : minors)
        for (const auto& u : mult) {
          auto a = u, b = u;
          a.insert(a.end(), m.plus.begin(), m.plus.end());
          b.insert(b.end(), m.minus.begin(), m.minus.end());
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          uf.join(at.at(a), at.at(b));
        }
    }
    std::map<Image, std::size_t> root_of_image;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      auto [it, fresh] = root_of_image.emplace(image_of(monos[i]), i);
      if (!fresh && uf.find(it->second) != uf.find(i)) r.kernel_in_ideal = false;
    }
  }
  return r;
}

}  // namespace oracle
