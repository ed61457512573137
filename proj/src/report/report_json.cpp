#include "hexcube/report_json.hpp"

#include <string>

namespace hexcube {

using nlohmann::json;

namespace {

json per_n(const std::map<std::size_t, std::size_t>& m) {
  json out = json::object();
  for (const auto& [n, c] : m) out[std::to_string(n)] = c;
  return out;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const HypercubeEmbedding& e) {
  return {{"m", e.m}, {"scale", e.scale}, {"phi", e.phi}};
}

json to_json(const FiveGonalWitness& w) {
  return {{"a", w.a}, {"b", w.b}, {"x", w.x}, {"y", w.y}, {"z", w.z}, {"deficit", w.deficit}, {"diameter", w.diameter}};
}

json to_json(const ZoneReport& r) {
  json flags = json::array();
  for (bool f : r.self_intersecting_flags) flags.push_back(f);
  return {{"zone_count", r.zone_count}, {"lengths", r.lengths}, {"self_intersecting_flags", flags}};
}

json to_json(const CheckReport& r) {
  json faces = json::object();
  for (const auto& [s, c] : r.face_vector) faces[std::to_string(s)] = c;
  return {{"code", r.code.hex()},
          {"n", r.n},
          {"face_vector", faces},
          {"q", opt(r.q)},
          {"bipartite", r.bipartite},
          {"three_connected", r.three_connected},
          {"face_isometric", r.face_isometric},
          {"diameter", r.diameter},
          {"zone_count", opt(r.zone_count)},
          {"zone_clean", opt(r.zone_clean)},
          {"embeddable", r.embeddable},
          {"dimension", opt(r.dimension)},
          {"five_gonal_witnesses", r.five_gonal_witnesses},
          {"t_obstruction", opt(r.t_obstruction)},
          {"automorphisms", r.automorphisms},
          {"chiral", r.chiral}};
}

json to_json(const Survivor& s) {
  return {{"name", s.name},
          {"code", s.code.hex()},
          {"n", s.n},
          {"dimension", opt(s.dimension)},
          {"zone_count", s.zone_count},
          {"automorphisms", s.automorphisms},
          {"chiral", s.chiral}};
}

json to_json(const TheoremReport& r) {
  json surv = json::array();
  for (const auto& s : r.survivors) surv.push_back(to_json(s));
  return {{"n_max", r.n_max},
          {"complete", r.complete},
          {"generated_per_n", per_n(r.generated_per_n)},
          {"survivors", surv},
          {"matches_expected", r.matches_expected},
          {"missing", r.missing}};
}

json to_json(const GcStatus& s) {
  return {{"k", s.k}, {"l", s.l}, {"n", s.n}, {"zone_clean", s.zone_clean}, {"chiral", s.chiral}, {"survivor", s.survivor}};
}

json to_json(const ZoneComputationReport& r) {
  json surv = json::array();
  for (const auto& s : r.survivors) surv.push_back(to_json(s));
  json gc = json::array();
  for (const auto& s : r.gc) gc.push_back(to_json(s));
  return {{"n_max", r.n_max},
          {"gc_n_max", r.gc_n_max},
          {"complete", r.complete},
          {"generated_per_n", per_n(r.generated_per_n)},
          {"survivors", surv},
          {"gc", gc},
          {"survivors_are_theorem_graphs", r.survivors_are_theorem_graphs}};
}

json to_json(const HalfcubeSearch& s) {
  json out = {{"status", to_string(s.status)}, {"placements", s.placements}};
  out["embedding"] = s.embedding ? to_json(*s.embedding) : json(nullptr);
  return out;
}

json graph_json(const PlaneGraph& g, const CanonicalCode& code) {
  return {{"n", g.vertex_count()}, {"code", code.hex()}, {"rotation", g.rotation_lists()}};
}

json generation_summary(const GenSpec& spec, const GenResult& r, bool with_stats) {
  json filters = json::array();
  for (Filter f : spec.filters) filters.push_back(to_string(f));
  json out = {{"q", spec.q},
              {"n_max", spec.n_max},
              {"filters", filters},
              {"truncated", r.truncated},
              {"generated_per_n", per_n(r.generated_per_n)},
              {"output_per_n", per_n(r.count_per_n())},
              {"output_total", r.graphs.size()}};
  if (with_stats) {
    out["stats"] = {{"nodes", r.stats.nodes},           {"leaves", r.stats.leaves},
                    {"rejected", r.stats.rejected},     {"duplicates", r.stats.duplicates},
                    {"tasks", r.stats.tasks},           {"tasks_done", r.stats.tasks_done}};
  }
  return out;
}

}  // namespace hexcube
