#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube {

// Map operations.

/// Faces become vertices; rotation at a dual vertex follows its face.
PlaneGraph dual(const PlaneGraph& g);

/// Every vertex of degree d replaced by a d-gon.
PlaneGraph truncate(const PlaneGraph& g);

/// Every edge widened into a hexagon; faces keep their size.
PlaneGraph chamfer(const PlaneGraph& g);

/// Cut g along the belt of faces that starts at `start` (a dart of the first
/// face) and crosses opposite edges, then reglue the two sides shifted by
/// `shift` crossing positions.  All belt faces must be distinct and of
/// equal even size.
PlaneGraph twist_belt(const PlaneGraph& g, Dart start, int shift);

/// Goldberg-Coxeter construction GC_{k,l} of a 3-valent plane graph: the
/// dual triangulation is subdivided by the (k,l) triangular lattice and
/// dualised back.  Requires k >= 1 and 0 <= l <= k.
PlaneGraph goldberg_coxeter(const PlaneGraph& cubic, int k, int l);
PlaneGraph goldberg_coxeter_cube(int k, int l);

// Constructors.

PlaneGraph make_path(std::size_t edges);
PlaneGraph make_cycle(std::size_t n);
PlaneGraph make_prism(std::size_t k);
PlaneGraph make_cube();
PlaneGraph make_tetrahedron();
PlaneGraph make_octahedron();
PlaneGraph make_icosahedron();
PlaneGraph make_truncated_octahedron();
PlaneGraph make_truncated_tetrahedron();
PlaneGraph make_chamfered_cube();
PlaneGraph make_twisted_chamfered_cube();

/// Graphs by name: cube, prism(k) (also prismK), truncated_octahedron,
/// chamfered_cube, twisted_chamfered_cube, tetrahedron,
/// truncated_tetrahedron, octahedron, icosahedron, dual_chamfered_cube.
/// Throws std::invalid_argument for anything else.
PlaneGraph make_named(std::string_view name);
std::vector<std::string> named_graph_names();

}  // namespace hexcube
