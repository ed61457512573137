#include <algorithm>
#include <charconv>
#include <string>

#include "hexcube/named.hpp"

namespace hexcube {

PlaneGraph dual(const PlaneGraph& g) {
  const FaceSet fs = trace_faces(g);
  std::vector<Dart> sigma(g.dart_count());
  std::vector<Vertex> vertex_of(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d) {
    sigma[d] = g.face_next(d);
    vertex_of[d] = fs.face_of_dart[d];
  }
  return PlaneGraph::from_darts(std::move(sigma), std::move(vertex_of));
}

PlaneGraph truncate(const PlaneGraph& g) {
  // new vertex per dart
  std::vector<std::vector<Vertex>> faces;
  const FaceSet fs = trace_faces(g);
  for (const Face& f : fs.faces) {
    std::vector<Vertex> cycle;
    for (Dart d : f.darts) {
      cycle.push_back(d);
      cycle.push_back(PlaneGraph::alpha(d));
    }
    faces.push_back(std::move(cycle));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> cycle;
    const Dart start = g.darts_at(v).front();
    Dart d = start;
    do {
      cycle.push_back(d);
      d = g.sigma_inv(d);
    } while (d != start);
    faces.push_back(std::move(cycle));
  }
  return PlaneGraph::from_faces(g.dart_count(), faces);
}

PlaneGraph chamfer(const PlaneGraph& g) {
  // Old vertices keep their ids; the corner left by dart d is n + d.
  const auto n = static_cast<Vertex>(g.vertex_count());
  auto corner = [n](Dart d) { return n + d; };
  std::vector<std::vector<Vertex>> faces;
  const FaceSet fs = trace_faces(g);
  for (const Face& f : fs.faces) {
    std::vector<Vertex> cycle;
    for (Dart d : f.darts) cycle.push_back(corner(d));
    faces.push_back(std::move(cycle));
  }
  for (Dart d = 0; d < g.dart_count(); d += 2) {
    faces.push_back({corner(g.face_next(d)), corner(d), g.vertex_of(d), corner(g.sigma(d)),
                     corner(PlaneGraph::alpha(d)), g.head(d)});
  }
  return PlaneGraph::from_faces(n + g.dart_count(), faces);
}

PlaneGraph twist_belt(const PlaneGraph& g, Dart start, int shift) {
  const FaceSet fs = trace_faces(g);
  // x_i enters face F_i, y_i leaves it through the opposite edge.
  std::vector<Dart> enter;
  std::vector<Dart> leave;
  std::vector<bool> used(fs.faces.size(), false);
  Dart x = start;
  std::size_t face_size = fs.faces[fs.face_of_dart[start]].size();
  if (face_size % 2 != 0) throw std::invalid_argument("belt face has odd size");
  do {
    const std::uint32_t f = fs.face_of_dart[x];
    const Face& face = fs.faces[f];
    if (face.size() != face_size) throw std::invalid_argument("belt faces differ in size");
    if (used[f]) throw std::invalid_argument("belt visits a face twice");
    used[f] = true;
    const Dart y = face.darts[(fs.position_of_dart[x] + face_size / 2) % face_size];
    enter.push_back(x);
    leave.push_back(y);
    x = PlaneGraph::alpha(y);
  } while (x != start);

  const auto h = static_cast<long>(enter.size());
  auto rot = g.rotation_lists();
  // cut edge i joins vertex_of(y_i) with vertex_of(x_{i+1}); reglue with
  // x_{i+1+shift}
  for (long i = 0; i < h; ++i) {
    const Dart y = leave[i];
    const Dart xs = enter[((i + 1 + shift) % h + h) % h];
    const Vertex c = g.vertex_of(y);
    const Vertex d = g.vertex_of(xs);
    auto darts_c = g.darts_at(c);
    auto darts_d = g.darts_at(d);
    rot[c][std::find(darts_c.begin(), darts_c.end(), y) - darts_c.begin()] = d;
    rot[d][std::find(darts_d.begin(), darts_d.end(), xs) - darts_d.begin()] = c;
  }
  return PlaneGraph::from_rotation(rot);
}

PlaneGraph make_path(std::size_t edges) {
  if (edges == 0) throw std::invalid_argument("path needs at least one edge");
  std::vector<std::vector<Vertex>> rot(edges + 1);
  for (Vertex v = 0; v < edges; ++v) {
    rot[v].push_back(v + 1);
    rot[v + 1].push_back(v);
  }
  return PlaneGraph::from_rotation(rot);
}

PlaneGraph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Vertex> ring(n);
  for (Vertex v = 0; v < n; ++v) ring[v] = v;
  std::vector<Vertex> back(ring.rbegin(), ring.rend());
  return PlaneGraph::from_faces(n, {ring, back});
}

PlaneGraph make_prism(std::size_t k) {
  if (k < 3) throw std::invalid_argument("prism needs k >= 3");
  const auto kk = static_cast<Vertex>(k);
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> top(k);
  std::vector<Vertex> bottom(k);
  for (Vertex i = 0; i < kk; ++i) {
    top[i] = i;
    bottom[i] = 2 * kk - 1 - i;
    const Vertex j = (i + 1) % kk;
    faces.push_back({j, i, kk + i, kk + j});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return PlaneGraph::from_faces(2 * k, faces);
}

PlaneGraph make_cube() { return make_prism(4); }

PlaneGraph make_tetrahedron() {
  return PlaneGraph::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

PlaneGraph make_octahedron() {
  std::vector<std::vector<Vertex>> faces;
  for (Vertex i = 1; i <= 4; ++i) {
    const Vertex j = i % 4 + 1;
    faces.push_back({0, i, j});
    faces.push_back({5, j, i});
  }
  return PlaneGraph::from_faces(6, faces);
}

PlaneGraph make_icosahedron() {
  // apex 0, upper ring 1..5, lower ring 6..10, apex 11
  std::vector<std::vector<Vertex>> faces;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex u = 1 + i;
    const Vertex u1 = 1 + (i + 1) % 5;
    const Vertex l = 6 + i;
    const Vertex l1 = 6 + (i + 1) % 5;
    faces.push_back({0, u, u1});
    faces.push_back({u, l, u1});
    faces.push_back({u1, l, l1});
    faces.push_back({11, l1, l});
  }
  return PlaneGraph::from_faces(12, faces);
}

PlaneGraph make_truncated_octahedron() { return truncate(make_octahedron()); }

PlaneGraph make_truncated_tetrahedron() { return truncate(make_tetrahedron()); }

PlaneGraph make_chamfered_cube() { return chamfer(make_cube()); }

PlaneGraph make_twisted_chamfered_cube() {
  // Twist one of the four hexagonal belts of six faces by one step.
  const PlaneGraph g = make_chamfered_cube();
  const FaceSet fs = trace_faces(g);
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (fs.faces[fs.face_of_dart[d]].size() != 6) continue;
    std::vector<bool> seen(fs.faces.size(), false);
    Dart x = d;
    bool ok = true;
    std::size_t length = 0;
    do {
      const std::uint32_t f = fs.face_of_dart[x];
      const Face& face = fs.faces[f];
      if (face.size() != 6 || seen[f]) {
        ok = false;
        break;
      }
      seen[f] = true;
      ++length;
      x = PlaneGraph::alpha(face.darts[(fs.position_of_dart[x] + 3) % 6]);
    } while (x != d);
    if (ok && length == 6) return twist_belt(g, d, 1);
  }
  throw StructureError("chamfered cube has no hexagonal belt");
}

namespace {

bool parse_prism(std::string_view name, std::size_t& k) {
  std::string_view rest;
  if (name.starts_with("prism(") && name.ends_with(")")) {
    rest = name.substr(6, name.size() - 7);
  } else if (name.starts_with("prism")) {
    rest = name.substr(5);
  } else {
    return false;
  }
  if (rest.empty()) return false;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  return ec == std::errc{} && ptr == rest.data() + rest.size();
}

}  // namespace

PlaneGraph make_named(std::string_view name) {
  if (name == "cube") return make_cube();
  if (name == "truncated_octahedron") return make_truncated_octahedron();
  if (name == "chamfered_cube") return make_chamfered_cube();
  if (name == "twisted_chamfered_cube") return make_twisted_chamfered_cube();
  if (name == "tetrahedron") return make_tetrahedron();
  if (name == "truncated_tetrahedron") return make_truncated_tetrahedron();
  if (name == "octahedron") return make_octahedron();
  if (name == "icosahedron") return make_icosahedron();
  if (name == "dual_chamfered_cube") return dual(make_chamfered_cube());
  std::size_t k = 0;
  if (parse_prism(name, k)) return make_prism(k);
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_names() {
  return {"cube",         "prism(k)",   "truncated_octahedron", "chamfered_cube",
          "twisted_chamfered_cube", "tetrahedron", "truncated_tetrahedron", "octahedron",
          "icosahedron",  "dual_chamfered_cube"};
}

}  // namespace hexcube
