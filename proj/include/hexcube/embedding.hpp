#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hexcube/metric.hpp"
#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Raised by theta_classes on a graph that is not bipartite.
class NotBipartiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Djokovic-Winkler classes of the edges.
struct ThetaClasses {
  /// Class index per edge; classes are numbered by their smallest edge.
  std::vector<std::uint32_t> class_of;
  std::size_t m = 0;

  std::vector<std::vector<EdgeId>> members() const;
};

/// Edges xy and uv are related when d(x,u) + d(y,v) != d(x,v) + d(y,u).
bool theta_related(const PlaneGraph& g, const DistanceMatrix& d, EdgeId e, EdgeId f);

/// Transitive closure of the relation.  Throws NotBipartiteError.
ThetaClasses theta_classes(const PlaneGraph& g, const DistanceMatrix& d);

struct HypercubeEmbedding {
  std::size_t m = 0;
  int scale = 1;
  /// Sorted coordinate set per vertex.
  std::vector<std::vector<std::uint32_t>> phi;
};

struct ScaleCheck {
  bool ok = false;
  /// First pair (row-major, x < y) with scale * d(x, y) != Hamming.
  std::optional<std::pair<Vertex, Vertex>> violation;
  /// Set when phi is malformed (wrong vertex count, coordinate out of range).
  bool malformed = false;
};

ScaleCheck verify_scale_embedding(const DistanceMatrix& d, const HypercubeEmbedding& emb);
ScaleCheck verify_scale_embedding(const PlaneGraph& g, const HypercubeEmbedding& emb);

enum class RecognitionFailure { none, not_bipartite, intransitive, not_isometric };

struct Recognition {
  /// Set on success.
  std::optional<HypercubeEmbedding> embedding;
  RecognitionFailure failure = RecognitionFailure::none;
  /// Theta classes; filled whenever the graph is bipartite.
  ThetaClasses classes;
  /// not_bipartite: a closed odd walk.
  std::vector<Vertex> odd_cycle;
  /// intransitive: e ~ f and f ~ g but not e ~ g.
  std::array<EdgeId, 3> intransitive{};
  /// not_isometric: the first vertex pair whose distance is not preserved.
  std::pair<Vertex, Vertex> bad_pair{};

  bool ok() const { return embedding.has_value(); }
};

/// Partial-cube test.  Each theta class is oriented as the cut it induces,
/// with vertex 0 on the empty side, and the result is verified on all pairs.
Recognition recognize_partial_cube(const PlaneGraph& g);
Recognition recognize_partial_cube(const PlaneGraph& g, const DistanceMatrix& d);

/// Roles follow d(a,b) + d(x,y) + d(x,z) + d(y,z) <= sum over {x,y,z} of
/// d(a,.) + d(b,.).
struct FiveGonalWitness {
  Vertex a = 0, b = 0, x = 0, y = 0, z = 0;
  /// Right side minus left side; negative for a violation.
  int deficit = 0;
  /// Largest distance among the five points.
  int diameter = 0;

  bool operator==(const FiveGonalWitness&) const = default;
};

/// Violations in lexicographic order of (a, b, x, y, z) with a < b and
/// x < y < z.  With stop_at_first only the first is returned.
std::vector<FiveGonalWitness> five_gonal_scan(const DistanceMatrix& d, bool stop_at_first);

struct FiveGonalSummary {
  std::size_t violations = 0;
  std::optional<FiveGonalWitness> first;
  /// Smallest witness diameter, when any.
  std::optional<int> min_diameter;
};

/// Full scan without materializing the witness list.
FiveGonalSummary five_gonal_summary(const DistanceMatrix& d);

/// Smallest diameter among 5-gonal violations; no t-embedding exists for
/// t at or above it.  Empty when the metric is 5-gonal.
std::optional<int> t_embed_obstruction(const DistanceMatrix& d);

enum class SearchStatus { found, none, inconclusive };

struct HalfcubeSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<HypercubeEmbedding> embedding;
  std::uint64_t placements = 0;
};

inline constexpr std::uint64_t kDefaultPlacementBudget = 100'000'000;

/// Scale-2 embedding into the half-cube of dimension m (m <= 32) by
/// backtracking in BFS order.  Vertex 0 sits at the empty set and its first
/// BFS neighbour at {0, 1}; coordinates not used so far are tried in order
/// only.  `none` means the search was exhausted.
HalfcubeSearch search_halfcube_embedding(const PlaneGraph& g, std::size_t m,
                                         std::uint64_t budget = kDefaultPlacementBudget);

const char* to_string(SearchStatus s);
const char* to_string(RecognitionFailure f);

}  // namespace hexcube
