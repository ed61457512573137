#include <algorithm>
#include <numeric>
#include <queue>

#include "hexcube/embedding.hpp"
#include "hexcube/kernels.hpp"

namespace hexcube {

namespace {

struct DisjointSet {
  std::vector<std::uint32_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x < y) parent[y] = x;
    else if (y < x) parent[x] = y;
  }
};

// Coordinates as bit planes, the layout the Hamming kernel expects.
struct BitPlanes {
  std::size_t words = 0;
  std::size_t stride = 0;
  std::vector<std::uint64_t> bits;

  BitPlanes(std::size_t n, std::size_t m)
      : words(std::max<std::size_t>(1, (m + 63) / 64)), stride((n + 3) / 4 * 4), bits(words * stride, 0) {}
  void set(std::size_t v, std::uint32_t c) { bits[(c / 64) * stride + v] |= std::uint64_t{1} << (c % 64); }
};

// Row-major first pair with scale * d != Hamming.
std::optional<std::pair<Vertex, Vertex>> first_mismatch(const DistanceMatrix& d, const BitPlanes& p, int scale) {
  const auto& k = kernels::dispatch();
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = k.hamming_row(p.bits.data(), p.words, p.stride, i, d.row_ptr(i), scale, i + 1, n);
    if (j < n) return std::pair{static_cast<Vertex>(i), static_cast<Vertex>(j)};
  }
  return std::nullopt;
}

std::array<EdgeId, 3> intransitive_triple(const PlaneGraph& g, const DistanceMatrix& d,
                                          const std::vector<EdgeId>& cls, EdgeId from, EdgeId to) {
  // Shortest relation path from `from` to `to`; its first three edges form
  // the witness since path[0] and path[2] cannot be related.
  std::vector<std::int64_t> prev(g.edge_count(), -1);
  std::queue<EdgeId> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty()) {
    const EdgeId e = q.front();
    q.pop();
    if (e == to) break;
    for (EdgeId f : cls) {
      if (prev[f] == -1 && theta_related(g, d, e, f)) {
        prev[f] = e;
        q.push(f);
      }
    }
  }
  std::vector<EdgeId> path{to};
  while (path.back() != from) path.push_back(static_cast<EdgeId>(prev[path.back()]));
  std::reverse(path.begin(), path.end());
  return {path[0], path[1], path[2]};
}

}  // namespace

std::vector<std::vector<EdgeId>> ThetaClasses::members() const {
  std::vector<std::vector<EdgeId>> out(m);
  for (EdgeId e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(e);
  return out;
}

bool theta_related(const PlaneGraph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
  const auto [x, y] = g.endpoints(e);
  const auto [u, v] = g.endpoints(f);
  return d.at(x, u) + d.at(y, v) != d.at(x, v) + d.at(y, u);
}

ThetaClasses theta_classes(const PlaneGraph& g, const DistanceMatrix& d) {
  if (!is_bipartite(g).bipartite) throw NotBipartiteError("theta_classes: graph is not bipartite");
  const std::size_t edges = g.edge_count();
  DisjointSet ds(edges);
  for (EdgeId e = 0; e < edges; ++e) {
    for (EdgeId f = e + 1; f < edges; ++f) {
      if (ds.find(e) != ds.find(f) && theta_related(g, d, e, f)) ds.unite(e, f);
    }
  }
  ThetaClasses out;
  out.class_of.assign(edges, 0);
  std::vector<std::int64_t> index(edges, -1);
  for (EdgeId e = 0; e < edges; ++e) {
    const std::uint32_t root = ds.find(e);
    if (index[root] == -1) index[root] = static_cast<std::int64_t>(out.m++);
    out.class_of[e] = static_cast<std::uint32_t>(index[root]);
  }
  return out;
}

Recognition recognize_partial_cube(const PlaneGraph& g) { return recognize_partial_cube(g, all_pairs_distances(g)); }

Recognition recognize_partial_cube(const PlaneGraph& g, const DistanceMatrix& d) {
  Recognition r;
  const Bipartition bp = is_bipartite(g);
  if (!bp.bipartite) {
    r.failure = RecognitionFailure::not_bipartite;
    r.odd_cycle = bp.odd_cycle;
    return r;
  }
  r.classes = theta_classes(g, d);
  const auto members = r.classes.members();
  for (const auto& cls : members) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!theta_related(g, d, cls[i], cls[j])) {
          r.failure = RecognitionFailure::intransitive;
          r.intransitive = intransitive_triple(g, d, cls, cls[i], cls[j]);
          return r;
        }
      }
    }
  }

  const std::size_t n = g.vertex_count();
  HypercubeEmbedding emb;
  emb.m = r.classes.m;
  emb.scale = 1;
  emb.phi.assign(n, {});
  BitPlanes planes(n, emb.m);
  for (std::uint32_t c = 0; c < emb.m; ++c) {
    const auto [u, v] = g.endpoints(members[c].front());
    const bool root_near_v = d.at(0, v) < d.at(0, u);
    for (Vertex w = 0; w < n; ++w) {
      if ((d.at(w, v) < d.at(w, u)) != root_near_v) {
        emb.phi[w].push_back(c);
        planes.set(w, c);
      }
    }
  }
  if (auto bad = first_mismatch(d, planes, 1)) {
    r.failure = RecognitionFailure::not_isometric;
    r.bad_pair = *bad;
    return r;
  }
  r.embedding = std::move(emb);
  return r;
}

ScaleCheck verify_scale_embedding(const DistanceMatrix& d, const HypercubeEmbedding& emb) {
  ScaleCheck out;
  const std::size_t n = d.size();
  if (emb.phi.size() != n || emb.scale < 1) {
    out.malformed = true;
    return out;
  }
  BitPlanes planes(n, emb.m);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < emb.phi[v].size(); ++i) {
      const std::uint32_t c = emb.phi[v][i];
      if (c >= emb.m || (i > 0 && emb.phi[v][i - 1] >= c)) {
        out.malformed = true;
        return out;
      }
      planes.set(v, c);
    }
  }
  out.violation = first_mismatch(d, planes, emb.scale);
  out.ok = !out.violation;
  return out;
}

ScaleCheck verify_scale_embedding(const PlaneGraph& g, const HypercubeEmbedding& emb) {
  return verify_scale_embedding(all_pairs_distances(g), emb);
}

const char* to_string(RecognitionFailure f) {
  switch (f) {
    case RecognitionFailure::none: return "none";
    case RecognitionFailure::not_bipartite: return "not_bipartite";
    case RecognitionFailure::intransitive: return "intransitive";
    case RecognitionFailure::not_isometric: return "not_isometric";
  }
  return "?";
}

}  // namespace hexcube
