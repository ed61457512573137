#include "hexcube/canonical.hpp"

#include <cstdio>

namespace hexcube {

namespace {

/// Writes the code rooted at (root, reversed) into `out`, comparing on the fly
/// with `best`.  Returns <0, 0 or >0 like a three-way compare; on >0 the
/// output is abandoned early and left incomplete.
class CodeBuilder {
 public:
  explicit CodeBuilder(const PlaneGraph& g)
      : g_(g), number_(g.vertex_count(), 0), first_dart_(g.vertex_count(), 0), order_(g.vertex_count()) {}

  int build(Dart root, bool reversed, const std::vector<std::uint32_t>* best,
            std::vector<std::uint32_t>& out) {
    const std::size_t n = g_.vertex_count();
    std::fill(number_.begin(), number_.end(), 0);
    out.clear();
    out.reserve(1 + n + g_.dart_count());
    int cmp = best == nullptr ? -1 : 0;
    auto emit = [&](std::uint32_t w) {
      if (cmp == 0) {
        const std::uint32_t b = (*best)[out.size()];
        if (w < b) cmp = -1;
        else if (w > b) cmp = 1;
      }
      out.push_back(w);
      return cmp <= 0;
    };

    std::uint32_t next = 1;
    const Vertex r = g_.vertex_of(root);
    number_[r] = next++;
    first_dart_[r] = root;
    order_[0] = r;
    std::size_t tail = 1;
    if (!emit(static_cast<std::uint32_t>(n))) return cmp;
    for (std::size_t head = 0; head < tail; ++head) {
      const Vertex v = order_[head];
      const Dart start = first_dart_[v];
      Dart d = start;
      do {
        const Vertex w = g_.head(d);
        if (number_[w] == 0) {
          number_[w] = next++;
          first_dart_[w] = PlaneGraph::alpha(d);
          order_[tail++] = w;
        }
        if (!emit(number_[w])) return cmp;
        d = reversed ? g_.sigma_inv(d) : g_.sigma(d);
      } while (d != start);
      if (!emit(0)) return cmp;
    }
    return cmp;
  }

 private:
  const PlaneGraph& g_;
  std::vector<std::uint32_t> number_;
  std::vector<Dart> first_dart_;
  std::vector<Vertex> order_;
};

}  // namespace

std::string CanonicalCode::hex() const {
  const bool wide = !words.empty() && words.front() >= 256;
  std::string out;
  out.reserve(words.size() * (wide ? 4 : 2));
  char buf[8];
  for (std::uint32_t w : words) {
    std::snprintf(buf, sizeof buf, wide ? "%04x" : "%02x", static_cast<unsigned>(w));
    out += buf;
  }
  return out;
}

std::vector<std::uint32_t> bfs_code(const PlaneGraph& g, Dart root, bool reversed) {
  CodeBuilder builder(g);
  std::vector<std::uint32_t> out;
  builder.build(root, reversed, nullptr, out);
  return out;
}

CanonicalCode canonical_code(const PlaneGraph& g, bool include_reflection) {
  CodeBuilder builder(g);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> scratch;
  builder.build(0, false, nullptr, best);
  for (int pass = 0; pass < (include_reflection ? 2 : 1); ++pass) {
    const bool reversed = pass == 1;
    for (Dart d = 0; d < g.dart_count(); ++d) {
      if (builder.build(d, reversed, &best, scratch) < 0) best.swap(scratch);
    }
  }
  return CanonicalCode{std::move(best)};
}

SymmetryCount symmetry_count(const PlaneGraph& g) {
  const CanonicalCode canon = canonical_code(g, true);
  CodeBuilder builder(g);
  std::vector<std::uint32_t> scratch;
  SymmetryCount out;
  for (int pass = 0; pass < 2; ++pass) {
    for (Dart d = 0; d < g.dart_count(); ++d) {
      if (builder.build(d, pass == 1, &canon.words, scratch) == 0) {
        ++out.total;
        if (pass == 0) ++out.rotations;
      }
    }
  }
  // Minimal code reached only with reversed orientation: the rotation
  // subgroup has the same order, seen from the mirror side.
  if (out.rotations == 0) out.rotations = out.total;
  return out;
}

bool is_canonical_root(const PlaneGraph& g, Dart root) {
  const CanonicalCode canon = canonical_code(g, true);
  CodeBuilder builder(g);
  std::vector<std::uint32_t> scratch;
  return builder.build(root, false, &canon.words, scratch) == 0;
}

}  // namespace hexcube
