#pragma once

// Exhaustive growth of 3-valent plane maps with faces of size q and 6.
//
// State: vertices 0..n-1, each with darts 3v, 3v+1, 3v+2 in rotation order.
// A dart is free until paired.  Walking d -> sigma(alpha(d)) with free darts
// as fixed points of alpha splits the unfinished part of the map into
// regions; between consecutive free darts f and nf(f) of a region lies a
// fragment of a future face, len(f) darts long.  Pairing two free darts of
// one region keeps the map planar; every completed map is reached from
// exactly one rooted state sequence because the branch dart is a function
// of the state.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube::detail {

class MapSearch {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffU;
  static constexpr std::uint32_t kNewVertex = 0xfffffffeU;

  MapSearch(int q, std::size_t n_max);

  /// Free dart closing the longest open fragment, or kNone when complete.
  std::uint32_t branch_dart() const;
  /// Candidate partners of f: kNewVertex first, then free darts of f's
  /// region in region order.
  void options(std::uint32_t f, std::vector<std::uint32_t>& out) const;
  /// Applies a choice; false when the result cannot be completed.  The
  /// state is modified either way; roll back with undo(mark()).
  bool apply(std::uint32_t f, std::uint32_t choice);

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark);

  bool complete() const { return counter(kFree) == 0; }
  /// Complete with the right number of q-gons (hence a sphere).
  bool valid_leaf() const;
  std::size_t vertex_count() const { return counter(kVerts); }
  /// Graph of a complete state and the dart corresponding to dart 0.
  PlaneGraph to_graph(Dart& root) const;

 private:
  enum Counter { kVerts, kFree, kQFaces, kHexFaces };

  static std::uint32_t vertex(std::uint32_t d) { return d / 3; }
  static std::uint32_t sigma(std::uint32_t d) { return d % 3 == 2 ? d - 2 : d + 1; }
  std::uint32_t counter(Counter c) const { return counters_[c]; }

  void set(std::vector<std::uint32_t>& a, std::uint32_t i, std::uint32_t v) {
    log_.push_back({&a[i], a[i]});
    a[i] = v;
  }
  void bump(Counter c, int delta) { set(counters_, c, counters_[c] + static_cast<std::uint32_t>(delta)); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  bool close_face(std::uint32_t length);
  /// A fragment from free dart s: it must stay short enough and, when it
  /// has reached 6, be closable.
  bool fragment_ok(std::uint32_t s) const;

  int q_;
  std::size_t n_max_;
  std::uint32_t q_target_;
  std::uint32_t hex_max_;
  std::vector<std::uint32_t> alpha_, nf_, pf_, len_, counters_;
  struct Entry {
    std::uint32_t* slot;
    std::uint32_t old;
  };
  std::vector<Entry> log_;
};

}  // namespace hexcube::detail
