#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Raised when a zone operation meets a face of odd size.
class OddFaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ZoneCrossing {
  std::uint32_t face;
  /// Edge through which the zone enters the face.
  EdgeId entry;
};

struct Zone {
  /// Cyclic sequence; crossing i+1 enters through the edge opposite to the
  /// entry of crossing i.
  std::vector<ZoneCrossing> crossings;
  /// Crossed edges, ascending.
  std::vector<EdgeId> edges;
  /// Some face occurs twice in crossings.
  bool self_intersecting = false;

  std::size_t length() const { return crossings.size(); }
};

/// Edge half-way round face `face` from e.  Throws OddFaceError or
/// std::invalid_argument when e is not on the face.
EdgeId opposite_edge(const FaceSet& faces, std::uint32_t face, EdgeId e);

/// All zones, the one through the smallest unvisited edge first, each
/// started on the face left of that edge's even dart.
std::vector<Zone> trace_zones(const PlaneGraph& g);
std::vector<Zone> trace_zones(const PlaneGraph& g, const FaceSet& faces);

/// No zone meets a face twice.
bool zone_clean(const PlaneGraph& g);

/// Every face is a cycle whose own distances are the graph distances.
bool face_isometric(const PlaneGraph& g);

struct ZoneReport {
  std::size_t zone_count = 0;
  std::vector<std::size_t> lengths;
  std::vector<bool> self_intersecting_flags;
  bool clean() const;
};

ZoneReport zone_report(const std::vector<Zone>& zones);

}  // namespace hexcube
