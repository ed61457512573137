#include <algorithm>

#include "hexcube/embedding.hpp"
#include "hexcube/kernels.hpp"

namespace hexcube {

namespace {

// Calls visit(witness) for every violation in scan order; stops when visit
// returns false.
template <class Visit>
void scan(const DistanceMatrix& d, Visit&& visit) {
  const std::size_t n = d.size();
  if (n < 5) return;
  const auto& k = kernels::dispatch();
  std::vector<std::uint32_t> hits(n);
  auto D = [&d](std::size_t i, std::size_t j) { return int(d.at(i, j)); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
          if (y == a || y == b) continue;
          const int base = D(a, b) + D(x, y) - D(a, x) - D(a, y) - D(b, x) - D(b, y);
          const std::size_t count = k.five_gonal_row(d.row_ptr(a), d.row_ptr(b), d.row_ptr(x), d.row_ptr(y), base,
                                                     y + 1, n, hits.data());
          for (std::size_t h = 0; h < count; ++h) {
            const std::size_t z = hits[h];
            if (z == a || z == b) continue;
            FiveGonalWitness w;
            w.a = Vertex(a);
            w.b = Vertex(b);
            w.x = Vertex(x);
            w.y = Vertex(y);
            w.z = Vertex(z);
            w.deficit = -(base + D(x, z) + D(y, z) - D(a, z) - D(b, z));
            const std::size_t pts[5] = {a, b, x, y, z};
            for (int i = 0; i < 5; ++i) {
              for (int j = i + 1; j < 5; ++j) w.diameter = std::max(w.diameter, D(pts[i], pts[j]));
            }
            if (!visit(w)) return;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<FiveGonalWitness> five_gonal_scan(const DistanceMatrix& d, bool stop_at_first) {
  std::vector<FiveGonalWitness> out;
  scan(d, [&](const FiveGonalWitness& w) {
    out.push_back(w);
    return !stop_at_first;
  });
  return out;
}

FiveGonalSummary five_gonal_summary(const DistanceMatrix& d) {
  FiveGonalSummary s;
  scan(d, [&](const FiveGonalWitness& w) {
    if (s.violations++ == 0) s.first = w;
    s.min_diameter = std::min(s.min_diameter.value_or(w.diameter), w.diameter);
    return true;
  });
  return s;
}

std::optional<int> t_embed_obstruction(const DistanceMatrix& d) { return five_gonal_summary(d).min_diameter; }

}  // namespace hexcube
