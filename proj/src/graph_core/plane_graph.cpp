#include "hexcube/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hexcube {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

PlaneGraph PlaneGraph::from_rotation(const std::vector<std::vector<Vertex>>& rotation) {
  const std::size_t n = rotation.size();
  std::unordered_map<std::uint64_t, Dart> dart_of;
  std::size_t total = 0;
  for (const auto& row : rotation) total += row.size();
  if (total % 2 != 0) throw StructureError("rotation lists have odd total length");
  dart_of.reserve(total);

  Dart next_edge = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : rotation[u]) {
      if (v >= n) throw StructureError("neighbour index out of range");
      if (v == u) throw StructureError("loop at vertex " + std::to_string(u));
      if (dart_of.count(pair_key(u, v)) != 0) {
        throw StructureError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
      }
      auto rev = dart_of.find(pair_key(v, u));
      if (rev != dart_of.end()) {
        dart_of.emplace(pair_key(u, v), alpha(rev->second));
      } else {
        dart_of.emplace(pair_key(u, v), 2 * next_edge);
        ++next_edge;
      }
    }
  }
  if (2 * next_edge != total) throw StructureError("neighbour relation is not symmetric");

  std::vector<Dart> sigma(total);
  std::vector<Vertex> vertex_of(total);
  for (Vertex u = 0; u < n; ++u) {
    const auto& row = rotation[u];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Dart d = dart_of.at(pair_key(u, row[i]));
      const Dart e = dart_of.at(pair_key(u, row[(i + 1) % row.size()]));
      sigma[d] = e;
      vertex_of[d] = u;
    }
    if (row.empty()) throw StructureError("isolated vertex " + std::to_string(u));
  }
  return from_darts(std::move(sigma), std::move(vertex_of));
}

PlaneGraph PlaneGraph::from_faces(std::size_t vertex_count,
                                  const std::vector<std::vector<Vertex>>& faces) {
  std::unordered_map<std::uint64_t, Dart> dart_of;
  Dart next_edge = 0;
  std::size_t total = 0;
  for (const auto& f : faces) {
    if (f.size() < 2) throw StructureError("face with fewer than two vertices");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vertex a = f[i];
      const Vertex b = f[(i + 1) % f.size()];
      if (a >= vertex_count || b >= vertex_count) throw StructureError("face vertex out of range");
      if (a == b) throw StructureError("loop in face");
      if (dart_of.count(pair_key(a, b)) != 0) throw StructureError("directed edge used by two faces");
      auto rev = dart_of.find(pair_key(b, a));
      if (rev != dart_of.end()) {
        dart_of.emplace(pair_key(a, b), alpha(rev->second));
      } else {
        dart_of.emplace(pair_key(a, b), 2 * next_edge);
        ++next_edge;
      }
      ++total;
    }
  }
  if (2 * next_edge != total) throw StructureError("some edge is bordered by only one face");

  std::vector<Dart> sigma(total, 0);
  std::vector<Vertex> vertex_of(total, 0);
  for (const auto& f : faces) {
    const std::size_t s = f.size();
    for (std::size_t i = 0; i < s; ++i) {
      const Vertex a = f[i];
      const Vertex b = f[(i + 1) % s];
      const Vertex c = f[(i + 2) % s];
      const Dart out = dart_of.at(pair_key(a, b));
      vertex_of[out] = a;
      // face walk: (a->b) is followed by (b->c), so sigma(b->a) = (b->c)
      auto back = dart_of.find(pair_key(b, a));
      if (back == dart_of.end()) throw StructureError("some edge is bordered by only one face");
      sigma[back->second] = dart_of.at(pair_key(b, c));
    }
  }
  std::vector<bool> seen(vertex_count, false);
  for (Vertex v : vertex_of) seen[v] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw StructureError("vertex not on any face");
  }
  return from_darts(std::move(sigma), std::move(vertex_of));
}

PlaneGraph PlaneGraph::from_darts(std::vector<Dart> sigma, std::vector<Vertex> vertex_of) {
  if (sigma.empty()) throw StructureError("graph has no edges");
  if (sigma.size() % 2 != 0) throw StructureError("odd dart count");
  if (vertex_of.size() != sigma.size()) throw StructureError("vertex_of size mismatch");
  PlaneGraph g;
  g.sigma_ = std::move(sigma);
  g.vertex_of_ = std::move(vertex_of);
  g.build_indexes();
  g.validate();
  return g;
}

void PlaneGraph::build_indexes() {
  const std::size_t m = sigma_.size();
  sigma_inv_.assign(m, 0);
  std::vector<bool> hit(m, false);
  for (Dart d = 0; d < m; ++d) {
    const Dart s = sigma_[d];
    if (s >= m || hit[s]) throw StructureError("sigma is not a permutation");
    hit[s] = true;
    sigma_inv_[s] = d;
  }
  Vertex n = 0;
  for (Vertex v : vertex_of_) n = std::max(n, v + 1);
  std::vector<std::uint32_t> count(n + 1, 0);
  for (Vertex v : vertex_of_) ++count[v + 1];
  first_.assign(n + 1, 0);
  std::partial_sum(count.begin(), count.end(), first_.begin());
  rotation_.assign(m, 0);
  std::vector<bool> placed(n, false);
  for (Dart d = 0; d < m; ++d) {
    const Vertex v = vertex_of_[d];
    if (placed[v]) continue;
    placed[v] = true;
    std::uint32_t pos = first_[v];
    Dart e = d;
    do {
      if (vertex_of_[e] != v || pos >= first_[v + 1]) {
        throw StructureError("sigma orbit at vertex " + std::to_string(v) +
                             " does not match its dart set");
      }
      rotation_[pos++] = e;
      e = sigma_[e];
    } while (e != d);
    if (pos != first_[v + 1]) {
      throw StructureError("vertex " + std::to_string(v) + " has more than one rotation cycle");
    }
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
    throw StructureError("vertex ids are not dense");
  }
}

void PlaneGraph::validate() {
  const std::size_t n = vertex_count();
  // simple: no loops, no parallel edges
  for (Vertex v = 0; v < n; ++v) {
    auto ds = darts_at(v);
    std::vector<Vertex> heads;
    heads.reserve(ds.size());
    for (Dart d : ds) {
      if (head(d) == v) throw StructureError("loop at vertex " + std::to_string(v));
      heads.push_back(head(d));
    }
    std::sort(heads.begin(), heads.end());
    if (std::adjacent_find(heads.begin(), heads.end()) != heads.end()) {
      throw StructureError("parallel edges at vertex " + std::to_string(v));
    }
  }
  // connected
  std::vector<bool> reached(n, false);
  std::vector<Vertex> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : darts_at(v)) {
      const Vertex w = head(d);
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw StructureError("graph is not connected");
  // genus 0
  std::vector<bool> seen(sigma_.size(), false);
  std::size_t faces = 0;
  for (Dart d = 0; d < sigma_.size(); ++d) {
    if (seen[d]) continue;
    ++faces;
    Dart e = d;
    do {
      seen[e] = true;
      e = face_next(e);
    } while (e != d);
  }
  const long euler = static_cast<long>(n) - static_cast<long>(edge_count()) + static_cast<long>(faces);
  if (euler != 2) {
    throw StructureError("rotation system is not planar (V - E + F = " + std::to_string(euler) + ")");
  }
  face_count_ = faces;
}

std::vector<Vertex> PlaneGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for (Dart d : darts_at(v)) out.push_back(head(d));
  return out;
}

std::optional<Dart> PlaneGraph::dart_between(Vertex from, Vertex to) const {
  for (Dart d : darts_at(from)) {
    if (head(d) == to) return d;
  }
  return std::nullopt;
}

bool PlaneGraph::is_cubic() const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> PlaneGraph::rotation_lists() const {
  std::vector<std::vector<Vertex>> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = neighbors(v);
  return out;
}

PlaneGraph PlaneGraph::mirror() const { return from_darts(sigma_inv_, vertex_of_); }

std::vector<std::size_t> FaceSet::size_histogram() const {
  std::vector<std::size_t> hist;
  for (const auto& f : faces) {
    if (hist.size() <= f.size()) hist.resize(f.size() + 1, 0);
    ++hist[f.size()];
  }
  return hist;
}

FaceSet trace_faces(const PlaneGraph& g) {
  FaceSet out;
  const std::size_t m = g.dart_count();
  constexpr std::uint32_t kUnset = ~0U;
  out.face_of_dart.assign(m, kUnset);
  out.position_of_dart.assign(m, 0);
  for (Dart d = 0; d < m; ++d) {
    if (out.face_of_dart[d] != kUnset) continue;
    Face f;
    const auto id = static_cast<std::uint32_t>(out.faces.size());
    Dart e = d;
    do {
      out.face_of_dart[e] = id;
      out.position_of_dart[e] = static_cast<std::uint32_t>(f.darts.size());
      f.darts.push_back(e);
      e = g.face_next(e);
    } while (e != d);
    out.faces.push_back(std::move(f));
  }
  return out;
}

bool is_q6(const PlaneGraph& g, int q) {
  if (!g.is_cubic()) return false;
  const FaceSet fs = trace_faces(g);
  return std::all_of(fs.faces.begin(), fs.faces.end(), [q](const Face& f) {
    return static_cast<int>(f.size()) == q || f.size() == 6;
  });
}

}  // namespace hexcube
