#pragma once

// Test-only helpers.  Nothing here calls into the code paths under test
// except the PlaneGraph accessors.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube::testing {

/// Same map with vertex ids permuted by `perm` (new id = perm[old]).
inline PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (auto& w : nb) w = perm[w];
    rot[perm[v]] = nb;
  }
  return PlaneGraph::from_rotation(rot);
}

/// Random relabelling that also rotates each rotation list by a random
/// offset (the cyclic order is what matters, not where it starts).
inline PlaneGraph shuffle(const PlaneGraph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (auto& w : nb) w = perm[w];
    std::rotate(nb.begin(), nb.begin() + std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng),
                nb.end());
    rot[perm[v]] = nb;
  }
  return PlaneGraph::from_rotation(rot);
}

/// Floyd-Warshall on the edge list.
inline std::vector<std::vector<int>> floyd_warshall(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    d[a][b] = d[b][a] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::size_t count_faces(const std::vector<std::size_t>& hist, std::size_t size) {
  return size < hist.size() ? hist[size] : 0;
}

}  // namespace hexcube::testing
