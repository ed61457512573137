#include <bit>
#include <stdexcept>

#include "hexcube/embedding.hpp"

namespace hexcube {

namespace {

class HalfcubeSearcher {
 public:
  HalfcubeSearcher(const PlaneGraph& g, std::size_t m, std::uint64_t budget)
      : d_(all_pairs_distances(g)), m_(m), budget_(budget) {
    const std::size_t n = g.vertex_count();
    order_.reserve(n);
    parent_.assign(n, 0);
    std::vector<bool> seen(n, false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t h = 0; h < order_.size(); ++h) {
      for (Dart dt : g.darts_at(order_[h])) {
        const Vertex w = g.head(dt);
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = order_[h];
          order_.push_back(w);
        }
      }
    }
    pos_.assign(n, 0);
  }

  HalfcubeSearch run() {
    HalfcubeSearch out;
    pos_[0] = 0;
    placements_ = 1;
    const bool found = place(1, 0);
    out.placements = placements_;
    if (found) {
      out.status = SearchStatus::found;
      HypercubeEmbedding emb;
      emb.m = m_;
      emb.scale = 2;
      for (std::uint32_t p : pos_) {
        std::vector<std::uint32_t> coords;
        for (std::uint32_t c = 0; c < m_; ++c) {
          if (p >> c & 1U) coords.push_back(c);
        }
        emb.phi.push_back(std::move(coords));
      }
      if (!verify_scale_embedding(d_, emb).ok) throw std::logic_error("halfcube search produced a bad embedding");
      out.embedding = std::move(emb);
    } else {
      out.status = aborted_ ? SearchStatus::inconclusive : SearchStatus::none;
    }
    return out;
  }

 private:
  // Places order_[idx..]; `used` has the coordinates set by any placed vertex.
  bool place(std::size_t idx, std::uint32_t used) {
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    const std::uint32_t base = pos_[parent_[v]];
    std::uint32_t u0 = 0;
    while (u0 < m_ && (used >> u0 & 1U)) ++u0;
    std::uint32_t u1 = u0 + 1;
    while (u1 < m_ && (used >> u1 & 1U)) ++u1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const bool i_fresh = !(used >> i & 1U);
      if (i_fresh && i != u0) continue;
      for (std::uint32_t j = i + 1; j < m_; ++j) {
        const bool j_fresh = !(used >> j & 1U);
        if (j_fresh && j != (i_fresh ? u1 : u0)) continue;
        const std::uint32_t cand = base ^ (1U << i) ^ (1U << j);
        if (!consistent(idx, v, cand)) continue;
        if (++placements_ > budget_) {
          aborted_ = true;
          return false;
        }
        pos_[v] = cand;
        if (place(idx + 1, used | cand)) return true;
        if (aborted_) return false;
      }
    }
    return false;
  }

  bool consistent(std::size_t idx, Vertex v, std::uint32_t cand) const {
    for (std::size_t k = 0; k < idx; ++k) {
      const Vertex w = order_[k];
      if (std::popcount(cand ^ pos_[w]) != 2 * int(d_.at(v, w))) return false;
    }
    return true;
  }

  DistanceMatrix d_;
  std::size_t m_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> pos_;
  std::uint64_t placements_ = 0;
  bool aborted_ = false;
};

}  // namespace

HalfcubeSearch search_halfcube_embedding(const PlaneGraph& g, std::size_t m, std::uint64_t budget) {
  if (m > 32) throw std::invalid_argument("search_halfcube_embedding: m must be at most 32");
  if (g.vertex_count() == 0) throw std::invalid_argument("search_halfcube_embedding: empty graph");
  return HalfcubeSearcher(g, m, budget).run();
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace hexcube
