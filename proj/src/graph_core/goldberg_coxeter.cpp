#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hexcube/named.hpp"

namespace hexcube {

namespace {

// Eisenstein integer a + b*w with w = exp(i*pi/3).
struct Eis {
  long a = 0;
  long b = 0;
  Eis operator+(Eis o) const { return {a + o.a, b + o.b}; }
  Eis operator-(Eis o) const { return {a - o.a, b - o.b}; }
  Eis scaled(long s) const { return {a * s, b * s}; }
  bool operator==(const Eis&) const = default;
};

Eis rot60(Eis p) { return {-p.b, p.a + p.b}; }

Eis rotate(Eis p, int steps) {
  for (int i = 0; i < ((steps % 6) + 6) % 6; ++i) p = rot60(p);
  return p;
}

long cross(Eis u, Eis v) { return u.a * v.b - u.b * v.a; }

long key(Eis p) { return (p.a + (1L << 20)) * (1L << 21) + (p.b + (1L << 20)); }

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

/// Subdivision of a triangulation.  Each face gets the frame with corners
/// 0, z, z*w (z = k + l*w) in its own traversal order; frames of adjacent
/// faces are related by a rotation plus translation across the shared edge.
class LatticeSubdivision {
 public:
  LatticeSubdivision(const PlaneGraph& tri, int k, int l) : fs_(trace_faces(tri)) {
    const Eis z{k, l};
    corner_ = {Eis{0, 0}, z, rot60(z)};
    for (const Face& f : fs_.faces) {
      if (f.size() != 3) throw std::invalid_argument("goldberg_coxeter: dual is not a triangulation");
    }
    collect_points();
    glue_edges();
  }

  PlaneGraph build() {
    std::vector<std::vector<Vertex>> triangles;
    const std::size_t faces = fs_.faces.size();
    for (std::uint32_t f = 0; f < faces; ++f) {
      const auto [lo, hi] = bounds();
      for (long a = lo.a - 1; a <= hi.a + 1; ++a) {
        for (long b = lo.b - 1; b <= hi.b + 1; ++b) {
          const Eis p{a, b};
          emit_if_owned(f, {p, p + Eis{1, 0}, p + Eis{0, 1}}, triangles);
          emit_if_owned(f, {p + Eis{1, 0}, p + Eis{1, 1}, p + Eis{0, 1}}, triangles);
        }
      }
    }
    return PlaneGraph::from_faces(vertex_total_, triangles);
  }

 private:
  // Signed distance-like value of p from the line of edge i (>= 0 inside).
  long side(int i, Eis p) const { return cross(corner_[(i + 1) % 3] - corner_[i], p - corner_[i]); }

  bool inside(Eis p) const { return side(0, p) >= 0 && side(1, p) >= 0 && side(2, p) >= 0; }

  std::pair<Eis, Eis> bounds() const {
    Eis lo{corner_[0].a, corner_[0].b};
    Eis hi = lo;
    for (const Eis& c : corner_) {
      lo = {std::min(lo.a, c.a), std::min(lo.b, c.b)};
      hi = {std::max(hi.a, c.a), std::max(hi.b, c.b)};
    }
    return {lo, hi};
  }

  // Neighbouring face across edge i of f, the matching edge index there, and
  // the frame change.
  struct Across {
    std::uint32_t face;
    int edge;
    Eis map(Eis p, const std::array<Eis, 3>& corner, int i) const {
      const int steps = 2 * edge + 3 - 2 * i;
      return rotate(p - corner[i], steps) + corner[(edge + 1) % 3];
    }
  };

  Across across(std::uint32_t f, int i) const {
    const Dart d = fs_.faces[f].darts[i];
    const Dart r = PlaneGraph::alpha(d);
    return {fs_.face_of_dart[r], static_cast<int>(fs_.position_of_dart[r])};
  }

  void collect_points() {
    const auto [lo, hi] = bounds();
    local_.resize(fs_.faces.size());
    std::uint32_t next = 0;
    for (std::uint32_t f = 0; f < fs_.faces.size(); ++f) {
      for (long a = lo.a; a <= hi.a; ++a) {
        for (long b = lo.b; b <= hi.b; ++b) {
          const Eis p{a, b};
          if (inside(p)) local_[f].emplace(key(p), next++);
        }
      }
    }
    point_total_ = next;
  }

  std::uint32_t local_index(std::uint32_t f, Eis p) const {
    auto it = local_[f].find(key(p));
    if (it == local_[f].end()) throw std::logic_error("goldberg_coxeter: lattice point left the face");
    return it->second;
  }

  void glue_edges() {
    DisjointSet ds(point_total_);
    const auto [lo, hi] = bounds();
    for (std::uint32_t f = 0; f < fs_.faces.size(); ++f) {
      for (int i = 0; i < 3; ++i) {
        const Across other = across(f, i);
        for (long a = lo.a; a <= hi.a; ++a) {
          for (long b = lo.b; b <= hi.b; ++b) {
            const Eis p{a, b};
            if (!inside(p) || side(i, p) != 0) continue;
            ds.unite(local_index(f, p), local_index(other.face, other.map(p, corner_, i)));
          }
        }
      }
    }
    vertex_of_point_.assign(point_total_, 0);
    std::unordered_map<std::uint32_t, Vertex> id_of_root;
    // Deterministic numbering: face-major, then point order inside the face.
    for (std::uint32_t f = 0; f < fs_.faces.size(); ++f) {
      std::vector<std::pair<long, std::uint32_t>> pts(local_[f].begin(), local_[f].end());
      std::sort(pts.begin(), pts.end());
      for (const auto& [unused, idx] : pts) {
        const std::uint32_t root = ds.find(idx);
        auto it = id_of_root.emplace(root, static_cast<Vertex>(id_of_root.size())).first;
        vertex_of_point_[idx] = it->second;
      }
    }
    vertex_total_ = id_of_root.size();
  }

  Vertex vertex_for(std::uint32_t f, Eis q) const {
    if (inside(q)) return vertex_of_point_[local_index(f, q)];
    int outside_edge = -1;
    for (int i = 0; i < 3; ++i) {
      if (side(i, q) < 0) {
        if (outside_edge != -1) throw std::logic_error("goldberg_coxeter: point beyond a corner");
        outside_edge = i;
      }
    }
    const Across other = across(f, outside_edge);
    return vertex_of_point_[local_index(other.face, other.map(q, corner_, outside_edge))];
  }

  void emit_if_owned(std::uint32_t f, std::array<Eis, 3> tri,
                     std::vector<std::vector<Vertex>>& out) const {
    const Eis centroid3 = tri[0] + tri[1] + tri[2];
    for (int i = 0; i < 3; ++i) {
      const long s = cross(corner_[(i + 1) % 3] - corner_[i], centroid3 - corner_[i].scaled(3));
      if (s < 0) return;
      if (s == 0) {
        const Across other = across(f, i);
        if (std::pair{other.face, other.edge} < std::pair{f, i}) return;
      }
    }
    out.push_back({vertex_for(f, tri[0]), vertex_for(f, tri[1]), vertex_for(f, tri[2])});
  }

  FaceSet fs_;
  std::array<Eis, 3> corner_;
  std::vector<std::unordered_map<long, std::uint32_t>> local_;
  std::uint32_t point_total_ = 0;
  std::vector<Vertex> vertex_of_point_;
  std::size_t vertex_total_ = 0;
};

}  // namespace

PlaneGraph goldberg_coxeter(const PlaneGraph& cubic, int k, int l) {
  if (k < 1 || l < 0 || l > k) {
    throw std::invalid_argument("goldberg_coxeter: need k >= 1 and 0 <= l <= k");
  }
  if (!cubic.is_cubic()) throw std::invalid_argument("goldberg_coxeter: input must be 3-valent");
  const PlaneGraph tri = dual(cubic);
  LatticeSubdivision sub(tri, k, l);
  return dual(sub.build());
}

PlaneGraph goldberg_coxeter_cube(int k, int l) { return goldberg_coxeter(make_cube(), k, l); }

}  // namespace hexcube
