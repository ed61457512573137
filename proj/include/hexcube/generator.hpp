#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexcube/canonical.hpp"
#include "hexcube/plane_graph.hpp"

namespace hexcube {

enum class Filter { bipartite, zone_clean, partial_cube, five_gonal };

const char* to_string(Filter f);
/// Throws std::invalid_argument for unknown names.
Filter parse_filter(const std::string& name);

struct GenSpec {
  int q = 4;
  std::size_t n_max = 32;
  /// Applied in order after generation; a graph is kept when all pass.
  std::vector<Filter> filters;
  /// Worker threads; 0 means one.
  unsigned threads = 1;
  /// Wall-clock limit in seconds; absent means unlimited.
  std::optional<double> budget_seconds;
  /// When set, progress is saved to `<path>.json` and `<path>.plc` and a
  /// matching earlier checkpoint is resumed.
  std::string checkpoint_path;
  std::size_t checkpoint_every = 10'000;
};

struct GeneratedGraph {
  PlaneGraph graph;
  CanonicalCode code;
};

struct GenStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  /// Completed maps with a non-canonical root.
  std::uint64_t rejected = 0;
  /// Accepted maps whose code was already present; zero unless the
  /// canonical-root rule is broken.
  std::uint64_t duplicates = 0;
  std::size_t tasks = 0;
  std::size_t tasks_done = 0;
};

struct GenResult {
  /// Sorted by canonical code, hence by vertex count first.
  std::vector<GeneratedGraph> graphs;
  /// Budget ran out; `graphs` is then a subset.
  bool truncated = false;
  GenStats stats;
  /// Graphs before filtering, per vertex count.
  std::map<std::size_t, std::size_t> generated_per_n;

  std::map<std::size_t, std::size_t> count_per_n() const;
};

/// Number of q-gons every such graph has (4, 6 or 12).
int q_face_count(int q);

/// All connected 3-valent plane graphs with faces of size q and 6 and at
/// most n_max vertices, one per isomorphism class with mirror images
/// identified.  Throws std::invalid_argument unless q is 3, 4 or 5.
GenResult generate_q6(const GenSpec& spec);

/// Predicate applied by the filter stage.
bool passes(const PlaneGraph& g, Filter f);

}  // namespace hexcube
