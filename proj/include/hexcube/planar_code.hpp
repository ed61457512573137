#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hexcube/plane_graph.hpp"

namespace hexcube {

/// Malformed planar_code input; `offset` is the byte where decoding failed.
class PlanarCodeError : public StructureError {
 public:
  PlanarCodeError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

/// planar_code stream: optional header, then per graph the vertex count and,
/// for every vertex, its 1-based neighbours in rotation order closed by 0.
/// Graphs below 256 vertices use one byte per entry.  Larger graphs start
/// with a 0 byte and continue in 16-bit little-endian words.
class PlanarCodeReader {
 public:
  /// Consumes the whole stream up front.
  explicit PlanarCodeReader(std::istream& in);
  explicit PlanarCodeReader(std::string bytes);
  /// Next graph, or nothing at end of input.
  std::optional<PlaneGraph> next();
  std::size_t offset() const { return offset_; }

 private:
  int get();
  std::string bytes_;
  std::size_t offset_ = 0;
};

class PlanarCodeWriter {
 public:
  explicit PlanarCodeWriter(std::ostream& out, bool header = true);
  void write(const PlaneGraph& g);

 private:
  std::ostream& out_;
  bool header_pending_;
};

std::vector<PlaneGraph> read_planar_code(std::istream& in);
std::vector<PlaneGraph> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<PlaneGraph>& graphs);

/// Undirected DOT rendering of the graph.
std::string to_dot(const PlaneGraph& g, const std::string& name = "G");

}  // namespace hexcube
