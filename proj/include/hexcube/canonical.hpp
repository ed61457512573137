#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Isomorphism key for plane graphs.  The first word is the vertex count, so
/// the natural order sorts by size first.
struct CanonicalCode {
  std::vector<std::uint32_t> words;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;

  /// Fixed-width lowercase hex, two digits per word below 256 vertices and
  /// four digits otherwise.
  std::string hex() const;
};

/// Breadth-first code of g rooted at `root`.  Vertices are numbered 1.. in
/// discovery order; each vertex contributes its neighbours' numbers in
/// rotation order (reversed when `reversed`) starting from the dart it was
/// discovered through, followed by 0.
std::vector<std::uint32_t> bfs_code(const PlaneGraph& g, Dart root, bool reversed);

/// Minimal bfs_code over all roots, and over both orientations when
/// include_reflection is set.
CanonicalCode canonical_code(const PlaneGraph& g, bool include_reflection = true);

struct SymmetryCount {
  /// Orientation-preserving automorphisms.
  std::size_t rotations = 0;
  /// All map automorphisms, reflections included.
  std::size_t total = 0;
  bool chiral() const { return rotations == total; }
};

/// Automorphism counts of the map, from roots that reproduce the minimal code.
SymmetryCount symmetry_count(const PlaneGraph& g);

/// True when the unreversed code rooted at `root` equals the
/// reflection-inclusive canonical code.
bool is_canonical_root(const PlaneGraph& g, Dart root);

}  // namespace hexcube
