#include "hexcube/metric.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hexcube {

namespace {

constexpr DistanceMatrix::value_type kUnreached = std::numeric_limits<DistanceMatrix::value_type>::max();

std::size_t padded(std::size_t n) {
  return (n + DistanceMatrix::kRowAlign - 1) / DistanceMatrix::kRowAlign * DistanceMatrix::kRowAlign;
}

template <class NeighborFn>
DistanceMatrix bfs_all(std::size_t n, NeighborFn&& for_each_neighbor) {
  if (n >= kUnreached) throw StructureError("graph too large for 16-bit distances");
  DistanceMatrix dm(n);
  std::vector<DistanceMatrix::value_type> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex v = queue[head++];
      for_each_neighbor(v, [&](Vertex w) {
        if (dist[w] == kUnreached) {
          dist[w] = static_cast<DistanceMatrix::value_type>(dist[v] + 1);
          queue[tail++] = w;
        }
      });
    }
    if (tail != n) throw StructureError("graph is not connected");
    for (Vertex t = 0; t < n; ++t) dm.set(s, t, dist[t]);
  }
  return dm;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), stride_(padded(n)), data_(n * padded(n), 0) {}

DistanceMatrix::value_type DistanceMatrix::diameter() const {
  value_type best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) best = std::max(best, at(i, j));
  }
  return best;
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  DistanceMatrix dm(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw StructureError("distance matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= kUnreached) throw StructureError("distance out of range");
      dm.set(i, j, static_cast<value_type>(rows[i][j]));
    }
  }
  return dm;
}

DistanceMatrix all_pairs_distances(const PlaneGraph& g) {
  return bfs_all(g.vertex_count(), [&g](Vertex v, auto&& visit) {
    for (Dart d : g.darts_at(v)) visit(g.head(d));
  });
}

DistanceMatrix all_pairs_distances(const std::vector<std::vector<Vertex>>& adjacency) {
  return bfs_all(adjacency.size(), [&adjacency](Vertex v, auto&& visit) {
    for (Vertex w : adjacency[v]) visit(w);
  });
}

Bipartition is_bipartite(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> color(n, kNone);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  std::queue<Vertex> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Dart d : g.darts_at(v)) {
      const Vertex w = g.head(d);
      if (color[w] == kNone) {
        color[w] = static_cast<std::uint8_t>(1 - color[v]);
        parent[w] = v;
        depth[w] = depth[v] + 1;
        queue.push(w);
      } else if (color[w] == color[v]) {
        // v and w at equal depth in the BFS tree; climb to the common ancestor.
        Bipartition out;
        std::vector<Vertex> left{v};
        std::vector<Vertex> right{w};
        Vertex a = v;
        Vertex b = w;
        while (depth[a] > depth[b]) left.push_back(a = parent[a]);
        while (depth[b] > depth[a]) right.push_back(b = parent[b]);
        while (a != b) {
          left.push_back(a = parent[a]);
          right.push_back(b = parent[b]);
        }
        right.pop_back();
        out.odd_cycle = std::move(left);
        out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
        return out;
      }
    }
  }
  Bipartition out;
  out.bipartite = true;
  out.color = std::move(color);
  return out;
}

}  // namespace hexcube
