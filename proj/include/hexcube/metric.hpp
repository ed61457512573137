#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Symmetric hop-distance matrix.  Rows are padded to a multiple of 16
/// entries (zero filled) so vector kernels can load whole rows.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr std::size_t kRowAlign = 16;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }
  value_type at(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  void set(std::size_t i, std::size_t j, value_type v) { data_[i * stride_ + j] = v; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * stride_, n_}; }
  const value_type* row_ptr(std::size_t i) const { return data_.data() + i * stride_; }
  value_type diameter() const;

  /// Build from a dense matrix (tests and external metrics).
  static DistanceMatrix from_rows(const std::vector<std::vector<int>>& rows);

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<value_type> data_;
};

/// Breadth-first distances from every vertex.
DistanceMatrix all_pairs_distances(const PlaneGraph& g);

/// Distances of a graph given only by adjacency lists (no embedding).
/// Throws StructureError when the graph is disconnected.
DistanceMatrix all_pairs_distances(const std::vector<std::vector<Vertex>>& adjacency);

struct Bipartition {
  bool bipartite = false;
  /// 0/1 colour per vertex, filled when bipartite.
  std::vector<std::uint8_t> color;
  /// Closed odd walk v0 v1 ... vk (v0 adjacent to vk), filled otherwise.
  std::vector<Vertex> odd_cycle;
};

Bipartition is_bipartite(const PlaneGraph& g);

}  // namespace hexcube
