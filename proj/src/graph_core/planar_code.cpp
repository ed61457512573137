#include "hexcube/planar_code.hpp"

#include <cstring>
#include <string>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hexcube {

PlanarCodeError::PlanarCodeError(const std::string& what, std::size_t offset)
    : StructureError("planar_code: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

PlanarCodeReader::PlanarCodeReader(std::istream& in) : PlanarCodeReader(slurp(in)) {}

PlanarCodeReader::PlanarCodeReader(std::string bytes) : bytes_(std::move(bytes)) {
  const std::size_t len = std::strlen(kPlanarCodeHeader);
  if (bytes_.compare(0, len, kPlanarCodeHeader) == 0) offset_ = len;
}

int PlanarCodeReader::get() {
  if (offset_ >= bytes_.size()) return std::char_traits<char>::eof();
  return static_cast<unsigned char>(bytes_[offset_++]);
}

std::optional<PlaneGraph> PlanarCodeReader::next() {
  constexpr int kEof = std::char_traits<char>::eof();
  const std::size_t start = offset_;
  int first = get();
  if (first == kEof) return std::nullopt;
  bool wide = false;
  std::size_t n = static_cast<unsigned char>(first);
  auto read_word = [&]() -> std::size_t {
    if (!wide) {
      const int c = get();
      if (c == kEof) throw PlanarCodeError("truncated graph entry", offset_);
      return static_cast<unsigned char>(c);
    }
    const int lo = get();
    const int hi = get();
    if (lo == kEof || hi == kEof) throw PlanarCodeError("truncated graph entry", offset_);
    return static_cast<std::size_t>(static_cast<unsigned char>(lo)) |
           (static_cast<std::size_t>(static_cast<unsigned char>(hi)) << 8);
  };
  if (n == 0) {
    wide = true;
    n = read_word();
    if (n == 0) throw PlanarCodeError("graph with zero vertices", start);
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (std::size_t v = 0; v < n; ++v) {
    while (true) {
      const std::size_t w = read_word();
      if (w == 0) break;
      if (w > n) throw PlanarCodeError("neighbour " + std::to_string(w) + " out of range", offset_ - 1);
      rotation[v].push_back(static_cast<Vertex>(w - 1));
    }
  }
  try {
    return PlaneGraph::from_rotation(rotation);
  } catch (const PlanarCodeError&) {
    throw;
  } catch (const StructureError& e) {
    throw PlanarCodeError(std::string("invalid graph (") + e.what() + ")", start);
  }
}

PlanarCodeWriter::PlanarCodeWriter(std::ostream& out, bool header) : out_(out), header_pending_(header) {}

void PlanarCodeWriter::write(const PlaneGraph& g) {
  if (header_pending_) {
    out_ << kPlanarCodeHeader;
    header_pending_ = false;
  }
  const std::size_t n = g.vertex_count();
  const bool wide = n >= 256;
  if (n >= 65536) throw std::invalid_argument("planar_code: graph too large");
  auto put = [&](std::size_t w) {
    if (wide) {
      out_.put(static_cast<char>(w & 0xff));
      out_.put(static_cast<char>((w >> 8) & 0xff));
    } else {
      out_.put(static_cast<char>(w));
    }
  };
  if (wide) out_.put('\0');
  put(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Dart d : g.darts_at(v)) put(g.head(d) + 1);
    put(0);
  }
}

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
  PlanarCodeReader reader(in);
  std::vector<PlaneGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<PlaneGraph> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PlanarCodeError("cannot open '" + path + "'", 0);
  return read_planar_code(in);
}

void write_planar_code_file(const std::string& path, const std::vector<PlaneGraph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  PlanarCodeWriter writer(out);
  for (const auto& g : graphs) writer.write(g);
}

std::string to_dot(const PlaneGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    os << "  " << a << " -- " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hexcube
