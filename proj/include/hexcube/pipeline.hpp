#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>
#include <utility>

#include "hexcube/canonical.hpp"
#include "hexcube/embedding.hpp"
#include "hexcube/generator.hpp"
#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Raised when cross-checks between independent predicates disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CheckReport {
  CanonicalCode code;
  std::size_t n = 0;
  /// Face size -> count.
  std::map<std::size_t, std::size_t> face_vector;
  /// q when every face has size q or 6 (hexagons only: 6).
  std::optional<int> q;
  bool bipartite = false;
  bool three_connected = false;
  bool face_isometric = false;
  int diameter = 0;
  /// Zone data, present when all faces are even.
  std::optional<std::size_t> zone_count;
  std::optional<bool> zone_clean;
  bool embeddable = false;
  std::optional<std::size_t> dimension;
  std::size_t five_gonal_witnesses = 0;
  std::optional<int> t_obstruction;
  std::size_t automorphisms = 0;
  bool chiral = false;
};

struct CheckOptions {
  /// Count every 5-gonal violation instead of stopping at the first.
  bool count_five_gonal = true;
};

/// All predicates for one 3-valent plane graph.  Throws
/// std::invalid_argument when g is not 3-valent and ConsistencyError when
/// the predicates contradict each other.
CheckReport check_graph(const PlaneGraph& g, const CheckOptions& opts = {});

/// Vertex connectivity at least 3 (brute force over vertex pairs).
bool is_three_connected(const PlaneGraph& g);

/// Name of a known graph with this code: the named constructions and
/// GC(k,l) of the cube for small parameters.  Empty when unknown.
std::string known_name(const CanonicalCode& code);

/// Names and codes of the five graphs expected to survive.
std::vector<std::pair<std::string, CanonicalCode>> theorem_graphs();

struct RunOptions {
  unsigned threads = 1;
  std::optional<double> budget_seconds;
  std::string checkpoint_path;
};

struct Survivor {
  std::string name;
  CanonicalCode code;
  std::size_t n = 0;
  std::optional<std::size_t> dimension;
  std::size_t zone_count = 0;
  std::size_t automorphisms = 0;
  bool chiral = false;
};

struct TheoremReport {
  std::size_t n_max = 0;
  bool complete = false;
  std::map<std::size_t, std::size_t> generated_per_n;
  std::vector<Survivor> survivors;
  /// complete, n_max >= 32 and the survivors are the five expected graphs
  /// with dimensions 3, 4, 6, 7, 7.
  bool matches_expected = false;
  std::vector<std::string> missing;
};

inline constexpr std::size_t kTheoremBound = 32;

/// Every 4_n with n <= n_max through recognize_partial_cube.
TheoremReport verify_main_theorem(std::size_t n_max, const RunOptions& run = {});

struct GcStatus {
  int k = 0;
  int l = 0;
  std::size_t n = 0;
  bool zone_clean = false;
  bool chiral = false;
  /// Among the generated survivors (false when n > n_max).
  bool survivor = false;
};

struct ZoneComputationReport {
  std::size_t n_max = 0;
  std::size_t gc_n_max = 0;
  bool complete = false;
  std::map<std::size_t, std::size_t> generated_per_n;
  std::vector<Survivor> survivors;
  std::vector<GcStatus> gc;
  /// Survivor set equals the five expected graphs.
  bool survivors_are_theorem_graphs = false;
};

/// Every 4_n with n <= n_max through the zone filter; GC(k,l) of the cube
/// with 8(k^2+kl+l^2) <= gc_n_max are reported as well.
ZoneComputationReport reproduce_zone_computation(std::size_t n_max, std::size_t gc_n_max,
                                                 const RunOptions& run = {});

}  // namespace hexcube
