#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "hexcube/embedding.hpp"
#include "hexcube/generator.hpp"
#include "hexcube/planar_code.hpp"
#include "hexcube/zones.hpp"
#include "json.hpp"
#include "map_search.hpp"

namespace hexcube {

using detail::MapSearch;

namespace {

constexpr std::size_t kTaskTarget = 256;
constexpr std::size_t kMaxSplitDepth = 24;

struct Collector {
  std::vector<GeneratedGraph> graphs;
  GenStats stats;
};

class StopFlag {
 public:
  explicit StopFlag(std::optional<double> seconds) {
    if (seconds) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
    }
  }
  bool check() {
    if (stopped_.load(std::memory_order_relaxed)) return true;
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) stopped_.store(true);
    return stopped_.load();
  }
  bool stopped() const { return stopped_.load(); }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<bool> stopped_{false};
};

void handle_leaf(const MapSearch& s, Collector& out) {
  ++out.stats.leaves;
  if (!s.valid_leaf()) return;
  Dart root = 0;
  PlaneGraph g = s.to_graph(root);
  if (!is_canonical_root(g, root)) {
    ++out.stats.rejected;
    return;
  }
  CanonicalCode code = canonical_code(g);
  out.graphs.push_back({std::move(g), std::move(code)});
}

class Walker {
 public:
  Walker(MapSearch& s, Collector& out, StopFlag& stop) : s_(s), out_(out), stop_(stop) {}

  // Returns false when stopped.
  bool dfs(std::size_t depth) {
    if ((++out_.stats.nodes & 0xfff) == 0 && stop_.check()) return false;
    const std::uint32_t f = s_.branch_dart();
    if (f == MapSearch::kNone) {
      handle_leaf(s_, out_);
      return true;
    }
    if (buffers_.size() <= depth) buffers_.resize(depth + 1);
    s_.options(f, buffers_[depth]);
    for (std::size_t i = 0; i < buffers_[depth].size(); ++i) {
      const std::size_t m = s_.mark();
      const bool alive = s_.apply(f, buffers_[depth][i]);
      const bool go_on = !alive || dfs(depth + 1);
      s_.undo(m);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  MapSearch& s_;
  Collector& out_;
  StopFlag& stop_;
  std::vector<std::vector<std::uint32_t>> buffers_;
};

using Path = std::vector<std::uint32_t>;

// Replays a choice sequence; false if some step is dead (never for paths
// produced by split()).
bool replay(MapSearch& s, const Path& path) {
  for (std::uint32_t c : path) {
    const std::uint32_t f = s.branch_dart();
    if (f == MapSearch::kNone || !s.apply(f, c)) return false;
  }
  return true;
}

// Breadth-first expansion of the top of the tree into independent tasks.
// The result depends only on (q, n_max).
std::vector<Path> split(int q, std::size_t n_max, Collector& top) {
  std::vector<Path> frontier{Path{}};
  std::vector<std::uint32_t> opts;
  for (std::size_t depth = 0; depth < kMaxSplitDepth && !frontier.empty() && frontier.size() < kTaskTarget;
       ++depth) {
    std::vector<Path> next;
    for (const Path& path : frontier) {
      MapSearch s(q, n_max);
      replay(s, path);
      ++top.stats.nodes;
      const std::uint32_t f = s.branch_dart();
      if (f == MapSearch::kNone) {
        handle_leaf(s, top);
        continue;
      }
      s.options(f, opts);
      for (std::uint32_t c : opts) {
        const std::size_t m = s.mark();
        if (s.apply(f, c)) {
          Path child = path;
          child.push_back(c);
          next.push_back(std::move(child));
        }
        s.undo(m);
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

void merge_stats(GenStats& into, const GenStats& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.rejected += from.rejected;
  into.duplicates += from.duplicates;
}

class Checkpoint {
 public:
  Checkpoint(const GenSpec& spec, std::size_t tasks) : spec_(spec), tasks_(tasks) {}

  bool enabled() const { return !spec_.checkpoint_path.empty(); }

  /// Loads a matching checkpoint, if any.
  void load(std::vector<bool>& done, std::vector<GeneratedGraph>& graphs) {
    if (!enabled()) return;
    std::ifstream meta(spec_.checkpoint_path + ".json");
    if (!meta) return;
    nlohmann::json j = nlohmann::json::parse(meta);
    if (j.value("q", 0) != spec_.q || j.value("n_max", std::size_t{0}) != spec_.n_max ||
        j.value("tasks", std::size_t{0}) != tasks_) {
      throw std::invalid_argument("checkpoint '" + spec_.checkpoint_path + "' was written for another run");
    }
    for (std::size_t t : j.at("done")) done.at(t) = true;
    for (auto& g : read_planar_code_file(spec_.checkpoint_path + ".plc")) {
      CanonicalCode code = canonical_code(g);
      graphs.push_back({std::move(g), std::move(code)});
    }
  }

  void save(const std::vector<bool>& done, const std::vector<GeneratedGraph>& graphs) const {
    if (!enabled()) return;
    const std::string plc = spec_.checkpoint_path + ".plc";
    const std::string meta = spec_.checkpoint_path + ".json";
    {
      std::ofstream out(plc + ".tmp", std::ios::binary);
      PlanarCodeWriter w(out);
      for (const auto& g : graphs) w.write(g.graph);
    }
    nlohmann::json j;
    j["q"] = spec_.q;
    j["n_max"] = spec_.n_max;
    j["tasks"] = tasks_;
    j["done"] = nlohmann::json::array();
    for (std::size_t t = 0; t < done.size(); ++t) {
      if (done[t]) j["done"].push_back(t);
    }
    {
      std::ofstream out(meta + ".tmp");
      out << j.dump() << '\n';
    }
    std::rename((plc + ".tmp").c_str(), plc.c_str());
    std::rename((meta + ".tmp").c_str(), meta.c_str());
  }

 private:
  const GenSpec& spec_;
  std::size_t tasks_;
};

}  // namespace

int q_face_count(int q) {
  switch (q) {
    case 3: return 4;
    case 4: return 6;
    case 5: return 12;
    default: throw std::invalid_argument("q must be 3, 4 or 5");
  }
}

const char* to_string(Filter f) {
  switch (f) {
    case Filter::bipartite: return "bipartite";
    case Filter::zone_clean: return "zone_clean";
    case Filter::partial_cube: return "partial_cube";
    case Filter::five_gonal: return "five_gonal";
  }
  return "?";
}

Filter parse_filter(const std::string& name) {
  for (Filter f : {Filter::bipartite, Filter::zone_clean, Filter::partial_cube, Filter::five_gonal}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown filter '" + name + "'");
}

bool passes(const PlaneGraph& g, Filter f) {
  switch (f) {
    case Filter::bipartite: return is_bipartite(g).bipartite;
    case Filter::zone_clean: {
      const auto hist = trace_faces(g).size_histogram();
      for (std::size_t s = 1; s < hist.size(); s += 2) {
        if (hist[s] != 0) return false;
      }
      return zone_clean(g);
    }
    case Filter::partial_cube: return recognize_partial_cube(g).ok();
    case Filter::five_gonal: return five_gonal_scan(all_pairs_distances(g), true).empty();
  }
  return false;
}

std::map<std::size_t, std::size_t> GenResult::count_per_n() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& g : graphs) ++out[g.graph.vertex_count()];
  return out;
}

GenResult generate_q6(const GenSpec& spec) {
  q_face_count(spec.q);
  GenResult result;
  if (spec.n_max < 4) return result;

  Collector top;
  const std::vector<Path> tasks = split(spec.q, spec.n_max, top);
  result.stats.tasks = tasks.size();

  Checkpoint ckpt(spec, tasks.size());
  std::vector<bool> done(tasks.size(), false);
  std::vector<GeneratedGraph> restored;
  ckpt.load(done, restored);

  StopFlag stop(spec.budget_seconds);
  std::vector<Collector> per_task(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t since_save = 0;

  auto save_locked = [&]() {
    // Graphs found while splitting are recomputed on every run.
    std::vector<GeneratedGraph> all = restored;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (done[t]) all.insert(all.end(), per_task[t].graphs.begin(), per_task[t].graphs.end());
    }
    ckpt.save(done, all);
    since_save = 0;
  };

  auto worker = [&]() {
    MapSearch s(spec.q, spec.n_max);
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (done[t]) continue;
      }
      if (stop.check()) return;
      const std::size_t m = s.mark();
      replay(s, tasks[t]);
      Collector local;
      Walker walker(s, local, stop);
      const bool finished = walker.dfs(tasks[t].size());
      s.undo(m);
      std::lock_guard<std::mutex> lock(mu);
      per_task[t] = std::move(local);
      if (!finished) return;
      done[t] = true;
      since_save += per_task[t].graphs.size();
      if (ckpt.enabled() && since_save >= spec.checkpoint_every) save_locked();
    }
  };

  const unsigned threads = std::max(1U, spec.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (ckpt.enabled()) save_locked();

  std::vector<GeneratedGraph> all = std::move(restored);
  merge_stats(result.stats, top.stats);
  for (auto& g : top.graphs) all.push_back(std::move(g));
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    merge_stats(result.stats, per_task[t].stats);
    if (done[t]) ++result.stats.tasks_done;
    for (auto& g : per_task[t].graphs) all.push_back(std::move(g));
  }
  result.truncated = result.stats.tasks_done != tasks.size();

  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
  std::vector<GeneratedGraph> unique;
  for (auto& g : all) {
    if (!unique.empty() && unique.back().code == g.code) {
      ++result.stats.duplicates;
      continue;
    }
    unique.push_back(std::move(g));
  }
  for (auto& g : unique) {
    ++result.generated_per_n[g.graph.vertex_count()];
    const bool keep = std::all_of(spec.filters.begin(), spec.filters.end(),
                                  [&](Filter f) { return passes(g.graph, f); });
    if (keep) result.graphs.push_back(std::move(g));
  }
  return result;
}

}  // namespace hexcube
