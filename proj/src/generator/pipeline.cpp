#include "hexcube/pipeline.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "hexcube/metric.hpp"
#include "hexcube/named.hpp"
#include "hexcube/zones.hpp"

namespace hexcube {

namespace {

constexpr int kGcNameLimit = 4;

bool all_faces_even(const std::map<std::size_t, std::size_t>& fv) {
  return std::all_of(fv.begin(), fv.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

const std::map<CanonicalCode, std::string>& name_table() {
  static const std::map<CanonicalCode, std::string> table = [] {
    std::map<CanonicalCode, std::string> t;
    for (const auto& name : named_graph_names()) {
      if (name.find('(') != std::string::npos) continue;
      t.emplace(canonical_code(make_named(name)), name);
    }
    for (std::size_t k = 3; k <= 12; ++k) t.emplace(canonical_code(make_prism(k)), "prism" + std::to_string(k));
    for (int k = 1; k <= kGcNameLimit; ++k) {
      for (int l = 0; l <= k; ++l) {
        t.emplace(canonical_code(goldberg_coxeter_cube(k, l)),
                  "gc(" + std::to_string(k) + "," + std::to_string(l) + ")");
      }
    }
    return t;
  }();
  return table;
}

Survivor make_survivor(const GeneratedGraph& g, const Recognition& rec) {
  Survivor s;
  s.code = g.code;
  s.name = known_name(g.code);
  s.n = g.graph.vertex_count();
  if (rec.ok()) s.dimension = rec.embedding->m;
  s.zone_count = trace_zones(g.graph).size();
  const auto sym = symmetry_count(g.graph);
  s.automorphisms = sym.total;
  s.chiral = sym.chiral();
  return s;
}

GenSpec quartic_spec(std::size_t n_max, const RunOptions& run) {
  GenSpec spec;
  spec.q = 4;
  spec.n_max = n_max;
  spec.threads = run.threads;
  spec.budget_seconds = run.budget_seconds;
  spec.checkpoint_path = run.checkpoint_path;
  return spec;
}

}  // namespace

bool is_three_connected(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4) return false;
  std::vector<std::uint8_t> blocked(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::uint8_t> seen(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      blocked[u] = blocked[v] = 1;
      std::fill(seen.begin(), seen.end(), 0);
      Vertex s = 0;
      while (blocked[s]) ++s;
      stack.assign(1, s);
      seen[s] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Dart d : g.darts_at(x)) {
          const Vertex y = g.head(d);
          if (!blocked[y] && !seen[y]) {
            seen[y] = 1;
            ++reached;
            stack.push_back(y);
          }
        }
      }
      blocked[u] = blocked[v] = 0;
      if (reached != n - 2) return false;
    }
  }
  return true;
}

std::string known_name(const CanonicalCode& code) {
  const auto& t = name_table();
  auto it = t.find(code);
  return it == t.end() ? std::string() : it->second;
}

std::vector<std::pair<std::string, CanonicalCode>> theorem_graphs() {
  return {{"cube", canonical_code(make_cube())},
          {"prism6", canonical_code(make_prism(6))},
          {"truncated_octahedron", canonical_code(make_truncated_octahedron())},
          {"chamfered_cube", canonical_code(make_chamfered_cube())},
          {"twisted_chamfered_cube", canonical_code(make_twisted_chamfered_cube())}};
}

CheckReport check_graph(const PlaneGraph& g, const CheckOptions& opts) {
  if (!g.is_cubic()) throw std::invalid_argument("check_graph: graph is not 3-valent");
  CheckReport r;
  r.code = canonical_code(g);
  r.n = g.vertex_count();
  const auto hist = trace_faces(g).size_histogram();
  std::set<std::size_t> odd_sizes;
  for (std::size_t s = 0; s < hist.size(); ++s) {
    if (hist[s] == 0) continue;
    r.face_vector[s] = hist[s];
    if (s != 6) odd_sizes.insert(s);
  }
  if (odd_sizes.empty()) {
    r.q = 6;
  } else if (odd_sizes.size() == 1 && *odd_sizes.begin() >= 3 && *odd_sizes.begin() <= 5) {
    r.q = static_cast<int>(*odd_sizes.begin());
  }
  const DistanceMatrix d = all_pairs_distances(g);
  r.diameter = d.diameter();
  r.bipartite = is_bipartite(g).bipartite;
  r.three_connected = is_three_connected(g);
  r.face_isometric = face_isometric(g);
  if (all_faces_even(r.face_vector)) {
    const auto zones = trace_zones(g);
    r.zone_count = zones.size();
    r.zone_clean = std::none_of(zones.begin(), zones.end(), [](const Zone& z) { return z.self_intersecting; });
  }
  const Recognition rec = recognize_partial_cube(g, d);
  r.embeddable = rec.ok();
  if (rec.ok()) r.dimension = rec.embedding->m;
  if (opts.count_five_gonal) {
    const auto s = five_gonal_summary(d);
    r.five_gonal_witnesses = s.violations;
    r.t_obstruction = s.min_diameter;
  } else {
    const auto w = five_gonal_scan(d, true);
    r.five_gonal_witnesses = w.size();
    if (!w.empty()) r.t_obstruction = t_embed_obstruction(d);
  }
  const auto sym = symmetry_count(g);
  r.automorphisms = sym.total;
  r.chiral = sym.chiral();

  if (r.embeddable && r.five_gonal_witnesses != 0) {
    throw ConsistencyError("check_graph: embeddable graph violates the 5-gonal inequality");
  }
  if (r.embeddable && r.zone_clean == false) {
    throw ConsistencyError("check_graph: embeddable graph has a self-intersecting zone");
  }
  if (r.bipartite && r.five_gonal_witnesses == 0 && !r.embeddable) {
    throw ConsistencyError("check_graph: bipartite 5-gonal graph is not a partial cube");
  }
  return r;
}

TheoremReport verify_main_theorem(std::size_t n_max, const RunOptions& run) {
  TheoremReport rep;
  rep.n_max = n_max;
  const GenResult gen = generate_q6(quartic_spec(n_max, run));
  rep.complete = !gen.truncated;
  rep.generated_per_n = gen.generated_per_n;
  for (const auto& g : gen.graphs) {
    const Recognition rec = recognize_partial_cube(g.graph);
    if (!rec.ok()) continue;
    if (!five_gonal_scan(all_pairs_distances(g.graph), true).empty() || !zone_clean(g.graph)) {
      throw ConsistencyError("verify_main_theorem: embeddable graph fails a necessary condition");
    }
    rep.survivors.push_back(make_survivor(g, rec));
  }
  std::set<CanonicalCode> found;
  std::multiset<std::size_t> dims;
  for (const auto& s : rep.survivors) {
    found.insert(s.code);
    dims.insert(s.dimension.value_or(0));
  }
  std::set<CanonicalCode> expected;
  for (const auto& [name, code] : theorem_graphs()) {
    expected.insert(code);
    if (!found.count(code)) rep.missing.push_back(name);
  }
  rep.matches_expected = rep.complete && n_max >= kTheoremBound && found == expected &&
                         rep.survivors.size() == expected.size() &&
                         dims == std::multiset<std::size_t>{3, 4, 6, 7, 7};
  return rep;
}

ZoneComputationReport reproduce_zone_computation(std::size_t n_max, std::size_t gc_n_max, const RunOptions& run) {
  ZoneComputationReport rep;
  rep.n_max = n_max;
  rep.gc_n_max = gc_n_max;
  const GenResult gen = generate_q6(quartic_spec(n_max, run));
  rep.complete = !gen.truncated;
  rep.generated_per_n = gen.generated_per_n;
  std::set<CanonicalCode> codes;
  for (const auto& g : gen.graphs) {
    const bool clean = zone_clean(g.graph);
    const Recognition rec = recognize_partial_cube(g.graph);
    if (rec.ok() && !clean) {
      throw ConsistencyError("reproduce_zone_computation: partial cube with a self-intersecting zone");
    }
    if (!clean) continue;
    rep.survivors.push_back(make_survivor(g, rec));
    codes.insert(g.code);
  }
  for (int k = 1; 8 * k * k <= static_cast<int>(gc_n_max); ++k) {
    for (int l = 0; l <= k; ++l) {
      const std::size_t n = 8 * static_cast<std::size_t>(k * k + k * l + l * l);
      if (n > gc_n_max) break;
      const PlaneGraph g = goldberg_coxeter_cube(k, l);
      GcStatus st;
      st.k = k;
      st.l = l;
      st.n = n;
      st.zone_clean = zone_clean(g);
      st.chiral = symmetry_count(g).chiral();
      st.survivor = n <= n_max && codes.count(canonical_code(g)) != 0;
      rep.gc.push_back(st);
    }
  }
  std::set<CanonicalCode> expected;
  for (const auto& [name, code] : theorem_graphs()) expected.insert(code);
  rep.survivors_are_theorem_graphs = rep.complete && codes == expected;
  return rep;
}

}  // namespace hexcube
