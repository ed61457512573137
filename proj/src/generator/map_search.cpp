#include "map_search.hpp"

#include "hexcube/generator.hpp"

namespace hexcube::detail {

MapSearch::MapSearch(int q, std::size_t n_max)
    : q_(q),
      n_max_(n_max),
      q_target_(static_cast<std::uint32_t>(q_face_count(q))),
      hex_max_(static_cast<std::uint32_t>(n_max / 2 + 2 > q_target_ ? n_max / 2 + 2 - q_target_ : 0)) {
  const std::size_t darts = 3 * std::max<std::size_t>(n_max, 1);
  alpha_.assign(darts, kNone);
  nf_.assign(darts, kNone);
  pf_.assign(darts, kNone);
  len_.assign(darts, 0);
  counters_ = {1, 3, 0, 0};
  for (std::uint32_t i = 0; i < 3; ++i) {
    nf_[i] = (i + 1) % 3;
    pf_[(i + 1) % 3] = i;
    len_[i] = 1;
  }
  log_.reserve(1024);
}

std::uint32_t MapSearch::branch_dart() const {
  std::uint32_t best = kNone;
  std::uint32_t best_len = 0;
  const std::uint32_t darts = 3 * counter(kVerts);
  for (std::uint32_t d = 0; d < darts; ++d) {
    if (alpha_[d] == kNone && (best == kNone || len_[d] > best_len)) {
      best = d;
      best_len = len_[d];
    }
  }
  return best == kNone ? kNone : nf_[best];
}

bool MapSearch::adjacent(std::uint32_t u, std::uint32_t v) const {
  for (std::uint32_t i = 0; i < 3; ++i) {
    const std::uint32_t a = alpha_[3 * u + i];
    if (a != kNone && vertex(a) == v) return true;
  }
  return false;
}

void MapSearch::options(std::uint32_t f, std::vector<std::uint32_t>& out) const {
  out.clear();
  if (counter(kVerts) < n_max_) out.push_back(kNewVertex);
  const std::uint32_t vf = vertex(f);
  for (std::uint32_t g = nf_[f]; g != f; g = nf_[g]) {
    if (vertex(g) != vf && !adjacent(vf, vertex(g))) out.push_back(g);
  }
}

bool MapSearch::close_face(std::uint32_t length) {
  if (length == static_cast<std::uint32_t>(q_)) {
    bump(kQFaces, 1);
    return counter(kQFaces) <= q_target_;
  }
  if (length == 6) {
    bump(kHexFaces, 1);
    return counter(kHexFaces) <= hex_max_;
  }
  return false;
}

bool MapSearch::fragment_ok(std::uint32_t s) const {
  const std::uint32_t L = len_[s];
  if (L > 6) return false;
  const std::uint32_t e = nf_[s];
  // A lone free dart can only take a new vertex, which adds two darts.
  if (e == s) return L + 2 <= 6;
  if (L == 6) return vertex(e) != vertex(s) && !adjacent(vertex(e), vertex(s));
  return true;
}

bool MapSearch::apply(std::uint32_t f, std::uint32_t choice) {
  const std::uint32_t p = pf_[f];
  if (choice == kNewVertex) {
    const std::uint32_t v = counter(kVerts);
    const std::uint32_t a = 3 * v, b = a + 1, c = a + 2;
    bump(kVerts, 1);
    bump(kFree, 1);
    set(alpha_, f, a);
    set(alpha_, a, f);
    set(len_, b, 1);
    set(nf_, b, c);
    set(pf_, c, b);
    if (p == f) {
      set(len_, c, len_[f] + 2);
      set(nf_, c, b);
      set(pf_, b, c);
      return fragment_ok(c) && fragment_ok(b);
    }
    const std::uint32_t after = nf_[f];
    set(len_, c, len_[f] + 1);
    set(nf_, c, after);
    set(pf_, after, c);
    set(len_, p, len_[p] + 1);
    set(nf_, p, b);
    set(pf_, b, p);
    return fragment_ok(p) && fragment_ok(b) && fragment_ok(c);
  }

  const std::uint32_t g = choice;
  const std::uint32_t p2 = pf_[g];
  bump(kFree, -2);
  set(alpha_, f, g);
  set(alpha_, g, f);
  const bool closes1 = p == g;
  const bool closes2 = p2 == f;
  bool ok = true;
  if (closes1) ok = close_face(len_[g]) && ok;
  if (closes2) ok = close_face(len_[f]) && ok;
  if (!ok) return false;
  const std::uint32_t nf_f = nf_[f];
  const std::uint32_t nf_g = nf_[g];
  if (!closes1) {
    set(len_, p, len_[p] + len_[g]);
    set(nf_, p, nf_g);
    set(pf_, nf_g, p);
  }
  if (!closes2) {
    set(len_, p2, len_[p2] + len_[f]);
    set(nf_, p2, nf_f);
    set(pf_, nf_f, p2);
  }
  return (closes1 || fragment_ok(p)) && (closes2 || fragment_ok(p2));
}

void MapSearch::undo(std::size_t mark) {
  while (log_.size() > mark) {
    *log_.back().slot = log_.back().old;
    log_.pop_back();
  }
}

bool MapSearch::valid_leaf() const { return complete() && counter(kQFaces) == q_target_; }

PlaneGraph MapSearch::to_graph(Dart& root) const {
  const std::uint32_t n = counter(kVerts);
  std::vector<std::vector<Vertex>> rot(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < 3; ++i) rot[v].push_back(vertex(alpha_[3 * v + i]));
  }
  PlaneGraph g = PlaneGraph::from_rotation(rot);
  root = *g.dart_between(0, rot[0][0]);
  return g;
}

}  // namespace hexcube::detail
