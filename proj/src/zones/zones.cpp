#include "hexcube/zones.hpp"

#include <algorithm>
#include <string>

#include "hexcube/metric.hpp"

namespace hexcube {

namespace {

void require_even(const FaceSet& faces) {
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    if (faces.faces[f].size() % 2 != 0) {
      throw OddFaceError("zones: face " + std::to_string(f) + " has odd size " +
                         std::to_string(faces.faces[f].size()));
    }
  }
}

Dart opposite_dart(const FaceSet& faces, Dart d) {
  const Face& f = faces.faces[faces.face_of_dart[d]];
  return f.darts[(faces.position_of_dart[d] + f.size() / 2) % f.size()];
}

}  // namespace

EdgeId opposite_edge(const FaceSet& faces, std::uint32_t face, EdgeId e) {
  const Face& f = faces.faces.at(face);
  if (f.size() % 2 != 0) throw OddFaceError("opposite_edge: odd face");
  for (Dart d : {2 * e, 2 * e + 1}) {
    if (faces.face_of_dart[d] == face) return PlaneGraph::edge_of(opposite_dart(faces, d));
  }
  throw std::invalid_argument("opposite_edge: edge not on face");
}

std::vector<Zone> trace_zones(const PlaneGraph& g) { return trace_zones(g, trace_faces(g)); }

std::vector<Zone> trace_zones(const PlaneGraph& g, const FaceSet& faces) {
  require_even(faces);
  std::vector<bool> visited(g.edge_count(), false);
  std::vector<Zone> zones;
  std::vector<std::uint32_t> seen_in_zone(faces.faces.size(), 0);
  std::uint32_t stamp = 0;
  for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
    if (visited[e0]) continue;
    ++stamp;
    Zone z;
    const Dart start = 2 * e0;
    Dart cur = start;
    do {
      const std::uint32_t f = faces.face_of_dart[cur];
      z.crossings.push_back({f, PlaneGraph::edge_of(cur)});
      visited[PlaneGraph::edge_of(cur)] = true;
      if (seen_in_zone[f] == stamp) z.self_intersecting = true;
      seen_in_zone[f] = stamp;
      cur = PlaneGraph::alpha(opposite_dart(faces, cur));
    } while (cur != start);
    for (const auto& c : z.crossings) z.edges.push_back(c.entry);
    std::sort(z.edges.begin(), z.edges.end());
    zones.push_back(std::move(z));
  }
  return zones;
}

bool zone_clean(const PlaneGraph& g) {
  const auto zones = trace_zones(g);
  return std::none_of(zones.begin(), zones.end(), [](const Zone& z) { return z.self_intersecting; });
}

bool face_isometric(const PlaneGraph& g) {
  const auto d = all_pairs_distances(g);
  for (const Face& f : trace_faces(g).faces) {
    const std::size_t s = f.size();
    std::vector<Vertex> cyc;
    for (Dart dt : f.darts) cyc.push_back(g.vertex_of(dt));
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        if (d.at(cyc[i], cyc[j]) != std::min(j - i, s - (j - i))) return false;
      }
    }
  }
  return true;
}

bool ZoneReport::clean() const {
  return std::none_of(self_intersecting_flags.begin(), self_intersecting_flags.end(), [](bool b) { return b; });
}

ZoneReport zone_report(const std::vector<Zone>& zones) {
  ZoneReport r;
  r.zone_count = zones.size();
  for (const auto& z : zones) {
    r.lengths.push_back(z.length());
    r.self_intersecting_flags.push_back(z.self_intersecting);
  }
  return r;
}

}  // namespace hexcube
