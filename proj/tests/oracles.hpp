#pragma once

// Slow reference searches used as test oracles.  They share no code with
// the library beyond PlaneGraph access and the distance matrix, which is
// itself checked against Floyd-Warshall in test_graph_core.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <tuple>
#include <vector>

#include "hexcube/metric.hpp"
#include "hexcube/plane_graph.hpp"

namespace hexcube::testing {

inline std::vector<Vertex> bfs_order(const PlaneGraph& g, std::vector<Vertex>& parent) {
  std::vector<Vertex> order{0};
  std::vector<bool> seen(g.vertex_count(), false);
  parent.assign(g.vertex_count(), 0);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (Vertex w : g.neighbors(order[h])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[h];
        order.push_back(w);
      }
    }
  }
  return order;
}

/// Is there a map into {0,1}^m with Hamming = scale * distance?  Every
/// vertex is tried at every point reachable from its BFS parent by flipping
/// `scale` coordinates; no symmetry reduction.
inline bool exists_scaled_map(const PlaneGraph& g, std::size_t m, int scale) {
  const auto d = all_pairs_distances(g);
  std::vector<Vertex> parent;
  const auto order = bfs_order(g, parent);
  std::vector<std::uint64_t> pos(g.vertex_count(), 0);
  std::vector<std::uint64_t> flips;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) == scale) flips.push_back(mask);
  }
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    const Vertex v = order[idx];
    for (std::uint64_t f : flips) {
      const std::uint64_t cand = pos[parent[v]] ^ f;
      bool ok = true;
      for (std::size_t k = 0; k < idx && ok; ++k) {
        ok = std::popcount(cand ^ pos[order[k]]) == scale * int(d.at(v, order[k]));
      }
      if (!ok) continue;
      pos[v] = cand;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  return rec(rec, 1);
}

struct Violation {
  std::array<Vertex, 5> roles;  // a, b, x, y, z
  int deficit;
  auto operator<=>(const Violation&) const = default;
};

/// Every 5-point set and each of its 10 choices of {a, b}, written with
/// a < b and x < y < z.
inline std::vector<Violation> five_gonal_violations(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  auto D = [&](Vertex i, Vertex j) { return int(d.at(i, j)); };
  std::vector<Violation> out;
  std::array<Vertex, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            for (int i = 0; i < 5; ++i) {
              for (int j = i + 1; j < 5; ++j) {
                std::vector<Vertex> rest;
                for (int k = 0; k < 5; ++k) {
                  if (k != i && k != j) rest.push_back(s[k]);
                }
                const Vertex a = s[i], b = s[j], x = rest[0], y = rest[1], z = rest[2];
                const int lhs = D(a, b) + D(x, y) + D(x, z) + D(y, z);
                const int rhs = D(a, x) + D(a, y) + D(a, z) + D(b, x) + D(b, y) + D(b, z);
                if (rhs - lhs < 0) out.push_back({{a, b, x, y, z}, rhs - lhs});
              }
            }
          }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hexcube::testing

#include <set>

#include "hexcube/canonical.hpp"

namespace hexcube::testing {

/// Canonical codes of all connected 3-valent plane maps with faces of size
/// q or 6 on at most n_max vertices.  Darts are paired one at a time, always
/// the smallest free dart, with any free dart or a fresh vertex; the only
/// pruning is that a known stretch of a face may not exceed 6 darts and a
/// closed face must have size q or 6.  Planarity is checked on complete maps.
inline std::set<CanonicalCode> brute_force_q6(int q, std::size_t n_max) {
  constexpr std::uint32_t kFree = 0xffffffffU;
  std::vector<std::uint32_t> alpha(3 * n_max, kFree);
  std::size_t verts = 1;
  std::set<CanonicalCode> out;
  auto sigma = [](std::uint32_t d) { return d % 3 == 2 ? d - 2 : d + 1; };

  auto faces_ok = [&]() {
    for (std::uint32_t d = 0; d < 3 * verts; ++d) {
      std::uint32_t cur = d;
      int steps = 0;
      while (true) {
        if (alpha[cur] == kFree) break;
        cur = sigma(alpha[cur]);
        ++steps;
        if (cur == d) {
          if (steps != q && steps != 6) return false;
          break;
        }
        if (steps > 6) return false;
      }
    }
    return true;
  };

  auto leaf = [&]() {
    std::vector<std::vector<Vertex>> rot(verts);
    for (std::size_t v = 0; v < verts; ++v) {
      for (int i = 0; i < 3; ++i) rot[v].push_back(alpha[3 * v + i] / 3);
    }
    try {
      const PlaneGraph g = PlaneGraph::from_rotation(rot);
      if (is_q6(g, q)) out.insert(canonical_code(g));
    } catch (const StructureError&) {
      // loops, parallel edges or higher genus
    }
  };

  auto rec = [&](auto&& self) -> void {
    std::uint32_t f = kFree;
    for (std::uint32_t d = 0; d < 3 * verts; ++d) {
      if (alpha[d] == kFree) {
        f = d;
        break;
      }
    }
    if (f == kFree) {
      leaf();
      return;
    }
    if (verts < n_max) {
      const std::uint32_t a = static_cast<std::uint32_t>(3 * verts);
      ++verts;
      alpha[f] = a;
      alpha[a] = f;
      if (faces_ok()) self(self);
      alpha[f] = alpha[a] = kFree;
      --verts;
    }
    for (std::uint32_t g = f + 1; g < 3 * verts; ++g) {
      if (alpha[g] != kFree || g / 3 == f / 3) continue;
      alpha[f] = g;
      alpha[g] = f;
      if (faces_ok()) self(self);
      alpha[f] = alpha[g] = kFree;
    }
  };
  rec(rec);
  return out;
}

}  // namespace hexcube::testing
