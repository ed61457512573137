// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Expected values are built here from the named constructions and
// from the slow oracles in oracles.hpp, not from the pipeline outputs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hexcube/embedding.hpp"
#include "hexcube/generator.hpp"
#include "hexcube/metric.hpp"
#include "hexcube/named.hpp"
#include "hexcube/pipeline.hpp"
#include "hexcube/report_json.hpp"
#include "hexcube/zones.hpp"
#include "oracles.hpp"

using namespace hexcube;

namespace {

// Collects the reasons a criterion failed.
class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) notes_.push_back(what);
  }
  bool empty() const { return notes_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < notes_.size() && i < 5; ++i) out << (i ? "; " : "") << notes_[i];
    if (notes_.size() > 5) out << "; +" << notes_.size() - 5 << " more";
    return out.str();
  }

 private:
  std::vector<std::string> notes_;
};

struct Expected {
  std::string name;
  PlaneGraph graph;
  std::size_t dimension;
};

std::vector<Expected> five_graphs() {
  return {{"cube", make_cube(), 3},
          {"prism6", make_prism(6), 4},
          {"truncated_octahedron", make_truncated_octahedron(), 6},
          {"chamfered_cube", make_chamfered_cube(), 7},
          {"twisted_chamfered_cube", make_twisted_chamfered_cube(), 7}};
}

std::map<CanonicalCode, std::size_t> expected_codes() {
  std::map<CanonicalCode, std::size_t> out;
  for (const auto& e : five_graphs()) out[canonical_code(e.graph)] = e.dimension;
  return out;
}

GenResult generate(int q, std::size_t n_max, unsigned threads = 1) {
  GenSpec spec;
  spec.q = q;
  spec.n_max = n_max;
  spec.threads = threads;
  return generate_q6(spec);
}

void criterion_theorem(Failures& f) {
  const TheoremReport r = verify_main_theorem(32);
  f.check(r.complete, "enumeration incomplete");
  f.check(r.matches_expected, "report does not match");
  std::map<CanonicalCode, std::size_t> got;
  for (const auto& s : r.survivors) got[s.code] = s.dimension.value_or(0);
  f.check(r.survivors.size() == 5, std::to_string(r.survivors.size()) + " survivors");
  f.check(got == expected_codes(), "survivor codes or dimensions differ");
  std::multiset<std::size_t> dims;
  for (const auto& [code, m] : got) dims.insert(m);
  f.check(dims == std::multiset<std::size_t>{3, 4, 6, 7, 7}, "dimension multiset");
  // Independent recount over the raw enumeration.
  std::size_t embeddable = 0;
  for (const auto& g : generate(4, 32).graphs) embeddable += recognize_partial_cube(g.graph).ok();
  f.check(embeddable == 5, "recount found " + std::to_string(embeddable));
}

// Dimension of an isometric map into a hypercube, by exhaustive search; 0
// when there is none with m < n.
std::size_t oracle_dimension(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t m = 1; m < std::max<std::size_t>(n, 2); ++m) {
    if (testing::exists_scaled_map(g, m, 1)) return m;
  }
  return 0;
}

void criterion_oracles(Failures& f) {
  std::set<CanonicalCode> gen;
  for (const auto& g : generate(4, 16).graphs) gen.insert(g.code);
  const auto brute = testing::brute_force_q6(4, 16);
  f.check(!brute.empty(), "oracle produced nothing");
  f.check(gen == brute, "q=4 n<=16: " + std::to_string(gen.size()) + " generated vs " +
                            std::to_string(brute.size()) + " by the oracle");

  std::vector<std::pair<std::string, PlaneGraph>> graphs;
  for (int q : {3, 4}) {
    for (auto& g : generate(q, 12).graphs) {
      graphs.emplace_back("q" + std::to_string(q) + "_n" + std::to_string(g.graph.vertex_count()), g.graph);
    }
  }
  for (const char* name : {"cube", "tetrahedron", "octahedron", "icosahedron", "truncated_tetrahedron", "prism3",
                           "prism4", "prism5", "prism6"}) {
    graphs.emplace_back(name, make_named(name));
  }
  for (std::size_t k = 3; k <= 12; ++k) graphs.emplace_back("cycle" + std::to_string(k), make_cycle(k));
  for (std::size_t k = 1; k <= 11; ++k) graphs.emplace_back("path" + std::to_string(k), make_path(k));
  for (const auto& [label, g] : graphs) {
    const Recognition rec = recognize_partial_cube(g);
    const std::size_t want = oracle_dimension(g);
    const std::size_t got = rec.ok() ? rec.embedding->m : 0;
    f.check(got == want, label + ": recognized m=" + std::to_string(got) + ", search m=" + std::to_string(want));
    if (rec.ok()) f.check(verify_scale_embedding(g, *rec.embedding).ok, label + ": embedding not isometric");
  }
}

void criterion_labels(Failures& f) {
  for (const auto& e : five_graphs()) {
    const PlaneGraph& g = e.graph;
    const Recognition rec = recognize_partial_cube(g);
    if (!rec.ok()) {
      f.check(false, e.name + " not recognized");
      continue;
    }
    // Class of an edge = the single coordinate its endpoints differ in.
    const auto& phi = rec.embedding->phi;
    std::vector<int> cls(g.edge_count(), -1);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const auto& a = phi[g.vertex_of(2 * id)];
      const auto& b = phi[g.vertex_of(2 * id + 1)];
      std::vector<std::uint32_t> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      f.check(diff.size() == 1, e.name + ": edge label is not a single coordinate");
      if (diff.size() == 1) cls[id] = static_cast<int>(diff[0]);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::set<int> seen;
      for (Dart d : g.darts_at(v)) seen.insert(cls[PlaneGraph::edge_of(d)]);
      f.check(seen.size() == g.degree(v), e.name + ": adjacent edges share a class");
    }
    const FaceSet faces = trace_faces(g);
    for (const Face& face : faces.faces) {
      const std::size_t s = face.size();
      std::set<int> distinct;
      for (std::size_t i = 0; i < s; ++i) {
        const int c1 = cls[PlaneGraph::edge_of(face.darts[i])];
        const int c2 = cls[PlaneGraph::edge_of(face.darts[(i + s / 2) % s])];
        distinct.insert(c1);
        f.check(c1 == c2, e.name + ": opposite edges of a face differ");
      }
      if (s == 4 || s == 6) f.check(distinct.size() == s / 2, e.name + ": wrong class count on a face");
    }
    // Parity on the faces and on the fundamental cycles of a BFS tree.
    std::vector<std::vector<EdgeId>> cycles;
    for (const Face& face : faces.faces) {
      std::vector<EdgeId> c;
      for (Dart d : face.darts) c.push_back(PlaneGraph::edge_of(d));
      cycles.push_back(c);
    }
    std::vector<Vertex> parent;
    const auto order = testing::bfs_order(g, parent);
    std::vector<Dart> up(g.vertex_count(), 0);
    std::vector<bool> tree(g.edge_count(), false);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Dart d = *g.dart_between(order[i], parent[order[i]]);
      up[order[i]] = d;
      tree[PlaneGraph::edge_of(d)] = true;
    }
    auto path_to_root = [&](Vertex v) {
      std::vector<EdgeId> p;
      for (; v != 0; v = parent[v]) p.push_back(PlaneGraph::edge_of(up[v]));
      return p;
    };
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (tree[id]) continue;
      std::vector<EdgeId> c = path_to_root(g.vertex_of(2 * id));
      const auto other = path_to_root(g.vertex_of(2 * id + 1));
      c.insert(c.end(), other.begin(), other.end());
      c.push_back(id);
      cycles.push_back(c);
    }
    for (const auto& c : cycles) {
      std::map<int, int> count;
      for (EdgeId id : c) ++count[cls[id]];
      for (const auto& [k, v] : count) f.check(v % 2 == 0, e.name + ": a cycle crosses a class oddly");
    }
  }
}

void criterion_equivalence(Failures& f) {
  std::size_t embeddable = 0;
  const GenResult gen = generate(4, 24);
  std::set<CanonicalCode> codes;
  for (const auto& g : gen.graphs) codes.insert(g.code);
  f.check(codes == testing::brute_force_q6(4, 24), "generated 4_n, n<=24, differs from the oracle");
  for (const auto& g : gen.graphs) {
    const auto d = all_pairs_distances(g.graph);
    const bool pc = recognize_partial_cube(g.graph, d).ok();
    const bool scan_empty = five_gonal_scan(d, true).empty();
    const bool oracle_empty = testing::five_gonal_violations(d).empty();
    embeddable += pc;
    const std::string label = "n=" + std::to_string(g.graph.vertex_count()) + " " + g.code.hex().substr(0, 16);
    f.check(pc == scan_empty, label + ": recognition and 5-gonal scan disagree");
    f.check(scan_empty == oracle_empty, label + ": 5-gonal scan and 5-set oracle disagree");
  }
  f.check(embeddable == 3, std::to_string(embeddable) + " embeddable graphs with n<=24");
}

void criterion_zones(Failures& f) {
  const ZoneComputationReport r = reproduce_zone_computation(40, 72);
  f.check(r.complete, "enumeration incomplete");
  std::set<CanonicalCode> got;
  for (const auto& s : r.survivors) got.insert(s.code);
  std::set<CanonicalCode> want;
  for (const auto& [code, m] : expected_codes()) want.insert(code);
  f.check(got == want, std::to_string(got.size()) + " survivors, not the five expected graphs");
  f.check(r.survivors_are_theorem_graphs, "report flag");
  std::size_t gc_checked = 0;
  for (int k = 1; 8 * k * k <= 72; ++k) {
    for (int l : {0, k}) {
      const int n = 8 * (k * k + k * l + l * l);
      if (n > 72) continue;
      const PlaneGraph g = goldberg_coxeter_cube(k, l);
      const std::string label = "GC(" + std::to_string(k) + "," + std::to_string(l) + ")";
      f.check(g.vertex_count() == static_cast<std::size_t>(n), label + " has the wrong size");
      f.check(zone_clean(g), label + " has a self-intersecting zone");
      const auto it = std::find_if(r.gc.begin(), r.gc.end(), [&](const GcStatus& s) { return s.k == k && s.l == l; });
      f.check(it != r.gc.end() && it->zone_clean, label + " missing or unclean in the report");
      ++gc_checked;
    }
  }
  f.check(gc_checked == 4, "expected GC(1,0), GC(1,1), GC(2,0), GC(3,0)");
}

void criterion_spot_checks(Failures& f) {
  const auto dtt = all_pairs_distances(make_truncated_tetrahedron());
  f.check(!five_gonal_scan(dtt, true).empty(), "truncated tetrahedron is 5-gonal");
  const auto t = t_embed_obstruction(dtt);
  f.check(t == std::optional<int>(3), "truncated tetrahedron obstruction diameter");
  auto half = [&](const PlaneGraph& g, std::size_t m, const std::string& label) {
    const HalfcubeSearch s = search_halfcube_embedding(g, m);
    f.check(s.status == SearchStatus::found, label + ": " + to_string(s.status));
    if (s.embedding) {
      f.check(s.embedding->scale == 2 && s.embedding->m == m, label + ": wrong scale or dimension");
      f.check(verify_scale_embedding(g, *s.embedding).ok, label + ": not a scale-2 embedding");
      for (const auto& p : s.embedding->phi) f.check(p.size() % 2 == 0, label + ": point outside the half-cube");
    }
  };
  half(make_tetrahedron(), 3, "tetrahedron m=3");
  half(make_tetrahedron(), 4, "tetrahedron m=4");
  half(make_icosahedron(), 6, "icosahedron m=6");
}

void criterion_determinism(Failures& f) {
  std::set<std::string> theorem, zones;
  for (int rep = 0; rep < 2; ++rep) {
    for (unsigned threads : {1U, 8U}) {
      RunOptions run;
      run.threads = threads;
      theorem.insert(to_json(verify_main_theorem(32, run)).dump());
      zones.insert(to_json(reproduce_zone_computation(40, 72, run)).dump());
    }
  }
  f.check(theorem.size() == 1, "theorem reports differ");
  f.check(zones.size() == 1, "zone reports differ");
  std::set<std::string> streams;
  for (unsigned threads : {1U, 8U}) {
    std::string s;
    for (const auto& g : generate(4, 40, threads).graphs) s += g.code.hex() + '\n';
    streams.insert(s);
  }
  f.check(streams.size() == 1, "generated streams differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Failures&)>>> criteria{
      {"1 theorem reproduction (n<=32)", criterion_theorem},
      {"2 oracle equivalence", criterion_oracles},
      {"3 label properties on the five graphs", criterion_labels},
      {"4 partial cube <=> 5-gonal on 4_n, n<=24", criterion_equivalence},
      {"5 zone pipeline (n<=40, GC n<=72)", criterion_zones},
      {"6 non-embeddability spot checks", criterion_spot_checks},
      {"7 determinism across thread counts", criterion_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Failures f;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(f);
    } catch (const std::exception& e) {
      f.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    if (f.empty()) {
      std::cout << "PASS criterion " << name << " (" << timing << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << name << " (" << timing << "): " << f.summary() << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}
