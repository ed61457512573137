#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexcube {

using Vertex = std::uint32_t;
using Dart = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when a dart structure does not describe a connected simple plane map.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Connected plane graph stored as a combinatorial map.
///
/// Darts 2e and 2e+1 are the two halves of edge e, so alpha(d) = d ^ 1.
/// sigma(d) is the next dart around vertex_of(d) in rotation order.  Faces
/// are the orbits of sigma(alpha(d)), walked so that a face visits
/// vertex_of(d), vertex_of(alpha(d)), ... in sequence.
///
/// Instances are validated on construction (permutations, connectivity,
/// simplicity, genus 0) and are immutable afterwards.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Neighbours of each vertex listed in rotation order.
  static PlaneGraph from_rotation(const std::vector<std::vector<Vertex>>& rotation);

  /// Faces as vertex cycles, all walked with the same orientation.  Every
  /// directed edge must occur in exactly one face.
  static PlaneGraph from_faces(std::size_t vertex_count,
                               const std::vector<std::vector<Vertex>>& faces);

  /// Raw dart form; sigma must be a permutation whose orbits are the dart
  /// sets of the vertices.
  static PlaneGraph from_darts(std::vector<Dart> sigma, std::vector<Vertex> vertex_of);

  std::size_t vertex_count() const { return first_.empty() ? 0 : first_.size() - 1; }
  std::size_t dart_count() const { return sigma_.size(); }
  std::size_t edge_count() const { return sigma_.size() / 2; }
  std::size_t face_count() const { return face_count_; }

  static constexpr Dart alpha(Dart d) { return d ^ 1U; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart face_next(Dart d) const { return sigma_[alpha(d)]; }
  Vertex vertex_of(Dart d) const { return vertex_of_[d]; }
  Vertex head(Dart d) const { return vertex_of_[alpha(d)]; }
  static constexpr EdgeId edge_of(Dart d) { return d >> 1; }

  /// Darts leaving v, in rotation order.
  std::span<const Dart> darts_at(Vertex v) const {
    return {rotation_.data() + first_[v], rotation_.data() + first_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return first_[v + 1] - first_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::optional<Dart> dart_between(Vertex from, Vertex to) const;
  bool adjacent(Vertex a, Vertex b) const { return dart_between(a, b).has_value(); }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const {
    return {vertex_of_[2 * e], vertex_of_[2 * e + 1]};
  }

  bool is_cubic() const;

  /// Rotation lists, the inverse of from_rotation.
  std::vector<std::vector<Vertex>> rotation_lists() const;

  /// Same graph with every rotation reversed.
  PlaneGraph mirror() const;

 private:
  void build_indexes();
  void validate();

  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Vertex> vertex_of_;
  std::vector<std::uint32_t> first_;
  std::vector<Dart> rotation_;
  std::size_t face_count_ = 0;
};

struct Face {
  std::vector<Dart> darts;
  std::size_t size() const { return darts.size(); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<std::uint32_t> face_of_dart;
  /// Position of each dart inside its face.
  std::vector<std::uint32_t> position_of_dart;

  /// Number of faces of each size; index = size.
  std::vector<std::size_t> size_histogram() const;
};

/// Orbits of the face permutation, ordered by their smallest dart.
FaceSet trace_faces(const PlaneGraph& g);

/// Connected, 3-valent, every face a q-gon or a hexagon.
bool is_q6(const PlaneGraph& g, int q);

}  // namespace hexcube
