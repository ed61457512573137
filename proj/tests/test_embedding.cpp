#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hexcube/embedding.hpp"
#include "hexcube/named.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hexcube;
using hexcube::testing::exists_scaled_map;
using hexcube::testing::five_gonal_violations;

namespace {

PlaneGraph k23() { return PlaneGraph::from_rotation({{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}}); }

PlaneGraph random_tree(std::mt19937& rng, std::size_t n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = static_cast<Vertex>(rng() % v);
    rot[v].push_back(p);
    rot[p].push_back(v);
  }
  return PlaneGraph::from_rotation(rot);
}

std::vector<std::pair<const char*, PlaneGraph>> five_graphs() {
  return {{"cube", make_cube()},
          {"prism6", make_prism(6)},
          {"truncated_octahedron", make_truncated_octahedron()},
          {"chamfered_cube", make_chamfered_cube()},
          {"twisted_chamfered_cube", make_twisted_chamfered_cube()}};
}

std::size_t hamming(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> sym;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
  return sym.size();
}

}  // namespace

TEST_CASE("theta classes of small graphs") {
  {
    const auto g = make_cube();
    const auto t = theta_classes(g, all_pairs_distances(g));
    CHECK(t.m == 3);
    for (const auto& cls : t.members()) CHECK(cls.size() == 4);
  }
  {
    const auto g = make_prism(6);
    CHECK(theta_classes(g, all_pairs_distances(g)).m == 4);
  }
  {
    const auto g = make_path(3);
    const auto t = theta_classes(g, all_pairs_distances(g));
    CHECK(t.m == 3);
    for (const auto& cls : t.members()) CHECK(cls.size() == 1);
  }
  const auto tt = make_truncated_tetrahedron();
  CHECK_THROWS_AS(theta_classes(tt, all_pairs_distances(tt)), NotBipartiteError);
}

TEST_CASE("partial cube recognition on named graphs") {
  const std::map<std::string, std::size_t> dims = {{"cube", 3},
                                                   {"prism6", 4},
                                                   {"truncated_octahedron", 6},
                                                   {"chamfered_cube", 7},
                                                   {"twisted_chamfered_cube", 7}};
  for (const auto& [name, g] : five_graphs()) {
    CAPTURE(name);
    const auto r = recognize_partial_cube(g);
    REQUIRE(r.ok());
    CHECK(r.embedding->m == dims.at(name));
    CHECK(r.embedding->scale == 1);
    CHECK(r.embedding->phi[0].empty());
    CHECK(verify_scale_embedding(g, *r.embedding).ok);
  }
  const auto tt = recognize_partial_cube(make_truncated_tetrahedron());
  CHECK_FALSE(tt.ok());
  CHECK(tt.failure == RecognitionFailure::not_bipartite);
  CHECK(tt.odd_cycle.size() % 2 == 1);
}

TEST_CASE("even prisms: dimension is half the ring plus one") {
  for (std::size_t k = 2; k <= 8; ++k) {
    CAPTURE(k);
    const auto r = recognize_partial_cube(make_prism(2 * k));
    REQUIRE(r.ok());
    CHECK(r.embedding->m == k + 1);
  }
  // Odd prisms have odd faces.
  CHECK(recognize_partial_cube(make_prism(5)).failure == RecognitionFailure::not_bipartite);
}

TEST_CASE("intransitive witness") {
  const auto g = k23();
  const auto d = all_pairs_distances(g);
  const auto r = recognize_partial_cube(g, d);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.failure == RecognitionFailure::intransitive);
  const auto [e, f, h] = r.intransitive;
  CHECK(theta_related(g, d, e, f));
  CHECK(theta_related(g, d, f, h));
  CHECK_FALSE(theta_related(g, d, e, h));
}

TEST_CASE("verify_scale_embedding") {
  const auto cube = make_cube();
  const auto emb = recognize_partial_cube(cube).embedding.value();
  CHECK(verify_scale_embedding(cube, emb).ok);

  // Swap two coordinates on one vertex where they differ.
  auto bad = emb;
  bool changed = false;
  for (auto& p : bad.phi) {
    if (p.size() == 1) {
      p[0] = (p[0] + 1) % 3;
      changed = true;
      break;
    }
  }
  REQUIRE(changed);
  const auto res = verify_scale_embedding(cube, bad);
  CHECK_FALSE(res.ok);
  REQUIRE(res.violation);
  const auto d = all_pairs_distances(cube);
  const auto [x, y] = *res.violation;
  CHECK(x < y);
  CHECK(hamming(bad.phi[x], bad.phi[y]) != d.at(x, y));

  const auto tet = make_tetrahedron();
  HypercubeEmbedding h4{4, 2, {{}, {0, 1}, {0, 2}, {0, 3}}};
  CHECK(verify_scale_embedding(tet, h4).ok);
  HypercubeEmbedding h3{3, 2, {{}, {0, 1}, {0, 2}, {1, 2}}};
  CHECK(verify_scale_embedding(tet, h3).ok);
  h3.scale = 1;
  CHECK_FALSE(verify_scale_embedding(tet, h3).ok);

  HypercubeEmbedding out_of_range{2, 2, {{}, {0, 1}, {0, 2}, {1, 2}}};
  CHECK(verify_scale_embedding(tet, out_of_range).malformed);
  HypercubeEmbedding short_phi{3, 2, {{}, {0, 1}}};
  CHECK(verify_scale_embedding(tet, short_phi).malformed);
}

TEST_CASE("five-gonal scan matches the 5-set oracle") {
  std::vector<PlaneGraph> graphs = {make_truncated_tetrahedron(), make_octahedron(), make_icosahedron(),
                                    make_cube(), make_prism(5), make_tetrahedron(), k23(),
                                    dual(make_cube())};
  std::mt19937 rng(3);
  for (int i = 0; i < 4; ++i) graphs.push_back(hexcube::testing::shuffle(make_truncated_tetrahedron(), rng));
  for (const auto& g : graphs) {
    const auto d = all_pairs_distances(g);
    const auto expect = five_gonal_violations(d);
    const auto got = five_gonal_scan(d, false);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      const auto& w = got[i];
      CHECK(expect[i].roles == std::array<Vertex, 5>{w.a, w.b, w.x, w.y, w.z});
      CHECK(expect[i].deficit == w.deficit);
      CHECK(w.deficit < 0);
    }
    const auto first = five_gonal_scan(d, true);
    CHECK(first.size() == std::min<std::size_t>(1, got.size()));
    if (!got.empty()) CHECK(first[0] == got[0]);
    const auto s = five_gonal_summary(d);
    CHECK(s.violations == got.size());
  }
}

TEST_CASE("five-gonal scan on trees and tiny metrics") {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_tree(rng, 3 + rng() % 20);
    CHECK(five_gonal_scan(all_pairs_distances(g), false).empty());
  }
  CHECK(five_gonal_scan(all_pairs_distances(make_tetrahedron()), false).empty());
  CHECK(five_gonal_scan(all_pairs_distances(make_path(2)), false).empty());
}

TEST_CASE("t-embedding obstructions") {
  const auto tt = all_pairs_distances(make_truncated_tetrahedron());
  CHECK(tt.diameter() == 3);
  CHECK_FALSE(five_gonal_scan(tt, true).empty());
  CHECK(t_embed_obstruction(tt) == 3);
  CHECK_FALSE(t_embed_obstruction(all_pairs_distances(make_cube())).has_value());
  const auto dcc = all_pairs_distances(dual(make_chamfered_cube()));
  const auto t0 = t_embed_obstruction(dcc);
  REQUIRE(t0.has_value());
  CHECK(*t0 <= 3);
}

TEST_CASE("half-cube search") {
  const auto tet = make_tetrahedron();
  for (std::size_t m : {3, 4}) {
    const auto r = search_halfcube_embedding(tet, m);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.embedding->scale == 2);
    CHECK(r.embedding->m == m);
    CHECK(verify_scale_embedding(tet, *r.embedding).ok);
    for (const auto& p : r.embedding->phi) CHECK(p.size() % 2 == 0);
  }
  CHECK(search_halfcube_embedding(tet, 2).status == SearchStatus::none);

  const auto ico = make_icosahedron();
  const auto r = search_halfcube_embedding(ico, 6);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verify_scale_embedding(ico, *r.embedding).ok);
  CHECK(search_halfcube_embedding(ico, 6, 3).status == SearchStatus::inconclusive);
  CHECK_THROWS_AS(search_halfcube_embedding(ico, 33), std::invalid_argument);
}

TEST_CASE("half-cube search agrees with unreduced search") {
  const std::vector<std::pair<const char*, PlaneGraph>> graphs = {
      {"tetrahedron", make_tetrahedron()}, {"octahedron", make_octahedron()}, {"cube", make_cube()},
      {"prism3", make_prism(3)},           {"prism5", make_prism(5)},         {"k23", k23()},
      {"path4", make_path(4)},             {"cycle5", make_cycle(5)},         {"cycle6", make_cycle(6)}};
  for (const auto& [name, g] : graphs) {
    for (std::size_t m = 2; m <= 6; ++m) {
      CAPTURE(name);
      CAPTURE(m);
      const bool expect = exists_scaled_map(g, m, 2);
      const auto r = search_halfcube_embedding(g, m);
      REQUIRE(r.status != SearchStatus::inconclusive);
      CHECK((r.status == SearchStatus::found) == expect);
    }
  }
}

TEST_CASE("recognition agrees with brute-force isometric search") {
  std::vector<std::pair<std::string, PlaneGraph>> graphs;
  for (const auto& name : named_graph_names()) {
    if (name.find('(') != std::string::npos) continue;
    auto g = make_named(name);
    if (g.vertex_count() <= 12) graphs.emplace_back(name, g);
  }
  for (std::size_t k = 3; k <= 6; ++k) graphs.emplace_back("prism" + std::to_string(k), make_prism(k));
  graphs.emplace_back("k23", k23());
  for (std::size_t n = 3; n <= 8; ++n) graphs.emplace_back("cycle" + std::to_string(n), make_cycle(n));
  std::mt19937 rng(9);
  for (int i = 0; i < 6; ++i) graphs.emplace_back("tree", random_tree(rng, 4 + rng() % 8));
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    const auto d = all_pairs_distances(g);
    const auto r = recognize_partial_cube(g, d);
    if (!is_bipartite(g).bipartite) {
      CHECK_FALSE(r.ok());
      CHECK_FALSE(exists_scaled_map(g, std::min<std::size_t>(g.vertex_count() - 1, 8), 1));
      continue;
    }
    const std::size_t m = theta_classes(g, d).m;
    CHECK(r.ok() == exists_scaled_map(g, m, 1));
    if (r.ok()) CHECK(five_gonal_scan(d, true).empty());
  }
}

TEST_CASE("label properties on the five embedded graphs") {
  for (const auto& [name, g] : five_graphs()) {
    CAPTURE(name);
    const auto r = recognize_partial_cube(g);
    REQUIRE(r.ok());
    const auto& cls = r.classes.class_of;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto darts = g.darts_at(v);
      for (std::size_t i = 0; i < darts.size(); ++i) {
        for (std::size_t j = i + 1; j < darts.size(); ++j) {
          CHECK(cls[PlaneGraph::edge_of(darts[i])] != cls[PlaneGraph::edge_of(darts[j])]);
        }
      }
    }
    for (const Face& f : trace_faces(g).faces) {
      const std::size_t s = f.size();
      REQUIRE(s % 2 == 0);
      std::map<std::uint32_t, int> count;
      for (std::size_t i = 0; i < s; ++i) {
        const auto c = cls[PlaneGraph::edge_of(f.darts[i])];
        ++count[c];
        CHECK(c == cls[PlaneGraph::edge_of(f.darts[(i + s / 2) % s])]);
      }
      CHECK(count.size() == s / 2);
      for (const auto& [c, k] : count) CHECK(k % 2 == 0);
    }
  }
}
