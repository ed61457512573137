#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hexcube/embedding.hpp"
#include "hexcube/generator.hpp"
#include "hexcube/named.hpp"
#include "hexcube/pipeline.hpp"
#include "hexcube/planar_code.hpp"
#include "hexcube/report_json.hpp"
#include "hexcube/zones.hpp"

using namespace hexcube;

namespace {

enum Exit { kOk = 0, kInputError = 1, kUsageError = 2, kTruncated = 3, kMismatch = 4 };

// Malformed or unreadable input; reported with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int q = 4;
  std::size_t n_max = 0;
  std::size_t gc_n_max = 72;
  std::string named;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string report;
  std::string checkpoint;
  std::vector<std::string> filters;
  std::optional<double> budget;
  unsigned threads = 1;
  int k = 1;
  int l = 0;
  std::size_t m = 0;
  std::uint64_t placements = kDefaultPlacementBudget;
  bool stats = false;
  bool first_only = false;
  bool clean_only = false;
};

unsigned default_threads() {
  if (const char* env = std::getenv("HEXCUBE_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct Input {
  std::string label;
  PlaneGraph graph;
};

std::vector<Input> load_inputs(const Config& c) {
  std::vector<Input> out;
  if (!c.named.empty()) {
    try {
      out.push_back({c.named, make_named(c.named)});
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return out;
  }
  std::string bytes;
  if (c.input == "-") {
    bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.input, std::ios::binary);
    if (!in) throw InputError("cannot read '" + c.input + "'");
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  PlanarCodeReader reader(std::move(bytes));
  try {
    std::size_t index = 0;
    while (auto g = reader.next()) out.push_back({c.input + "#" + std::to_string(index++), std::move(*g)});
  } catch (const PlanarCodeError& e) {
    throw InputError(c.input + ": byte offset " + std::to_string(e.offset()) + ": " + e.what());
  } catch (const StructureError& e) {
    throw InputError(c.input + ": byte offset " + std::to_string(reader.offset()) + ": " + e.what());
  }
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_graphs(std::ostream& out, const std::string& format, const std::vector<GeneratedGraph>& graphs) {
  if (format == "plc" || format == "planar_code") {
    PlanarCodeWriter w(out);
    for (const auto& g : graphs) w.write(g.graph);
  } else if (format == "dot") {
    std::size_t i = 0;
    for (const auto& g : graphs) out << to_dot(g.graph, "G" + std::to_string(i++));
  } else {
    for (const auto& g : graphs) out << graph_json(g.graph, g.code).dump() << '\n';
  }
}

void write_report(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

RunOptions run_options(const Config& c) { return {c.threads, c.budget, c.checkpoint}; }

int cmd_generate(const Config& c) {
  GenSpec spec;
  spec.q = c.q;
  spec.n_max = c.n_max ? c.n_max : 32;
  spec.threads = c.threads;
  spec.budget_seconds = c.budget;
  spec.checkpoint_path = c.checkpoint;
  for (const auto& f : c.filters) spec.filters.push_back(parse_filter(f));
  std::cerr << "generating q=" << spec.q << " n<=" << spec.n_max << " threads=" << spec.threads << '\n';
  const GenResult r = generate_q6(spec);
  Sink sink(c.output);
  write_graphs(sink.out(), c.format, r.graphs);
  const auto summary = generation_summary(spec, r, c.stats);
  std::cerr << summary.dump() << '\n';
  write_report(c.report, summary);
  return r.truncated ? kTruncated : kOk;
}

int cmd_check(const Config& c) {
  CheckOptions opts;
  opts.count_five_gonal = !c.first_only;
  for (const auto& in : load_inputs(c)) {
    CheckReport rep;
    try {
      rep = check_graph(in.graph, opts);
    } catch (const std::invalid_argument& e) {
      throw InputError(in.label + ": " + e.what());
    }
    auto j = to_json(rep);
    j["label"] = in.label;
    j["name"] = known_name(rep.code);
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

void print_survivors(const std::vector<Survivor>& survivors) {
  for (const auto& s : survivors) std::cout << to_json(s).dump() << '\n';
}

int cmd_verify_theorem(const Config& c) {
  const std::size_t n_max = c.n_max ? c.n_max : kTheoremBound;
  std::cerr << "verifying 4_n for n<=" << n_max << '\n';
  const TheoremReport r = verify_main_theorem(n_max, run_options(c));
  print_survivors(r.survivors);
  write_report(c.report, to_json(r));
  if (!r.complete) return kTruncated;
  if (!r.matches_expected) {
    if (n_max < kTheoremBound) std::cerr << "bound " << n_max << " is below " << kTheoremBound << '\n';
    for (const auto& name : r.missing) std::cerr << "missing: " << name << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_zone_computation(const Config& c) {
  const std::size_t n_max = c.n_max ? c.n_max : 40;
  std::cerr << "zone filter on 4_n for n<=" << n_max << ", GC up to n=" << c.gc_n_max << '\n';
  const ZoneComputationReport r = reproduce_zone_computation(n_max, c.gc_n_max, run_options(c));
  print_survivors(r.survivors);
  for (const auto& gc : r.gc) std::cout << nlohmann::json{{"gc", to_json(gc)}}.dump() << '\n';
  write_report(c.report, to_json(r));
  if (!r.complete) return kTruncated;
  bool ok = n_max < kTheoremBound || r.survivors_are_theorem_graphs;
  for (const auto& gc : r.gc) {
    if ((gc.l == 0 || gc.l == gc.k) && !gc.zone_clean) ok = false;
  }
  return ok ? kOk : kMismatch;
}

int cmd_zones(const Config& c) {
  std::vector<GeneratedGraph> kept;
  for (auto& in : load_inputs(c)) {
    std::vector<Zone> zones;
    try {
      zones = trace_zones(in.graph);
    } catch (const OddFaceError& e) {
      throw InputError(in.label + ": " + e.what());
    }
    const ZoneReport rep = zone_report(zones);
    if (c.clean_only) {
      if (rep.clean()) kept.push_back({in.graph, canonical_code(in.graph)});
      continue;
    }
    auto j = to_json(rep);
    j["label"] = in.label;
    j["clean"] = rep.clean();
    std::cout << j.dump() << '\n';
  }
  if (c.clean_only) {
    Sink sink(c.output);
    write_graphs(sink.out(), c.format, kept);
  }
  return kOk;
}

int cmd_gc(const Config& c) {
  const PlaneGraph g = goldberg_coxeter_cube(c.k, c.l);
  Sink sink(c.output);
  write_graphs(sink.out(), c.format, {{g, canonical_code(g)}});
  return kOk;
}

int cmd_embed_halfcube(const Config& c) {
  for (const auto& in : load_inputs(c)) {
    const HalfcubeSearch s = search_halfcube_embedding(in.graph, c.m, c.placements);
    auto j = to_json(s);
    j["label"] = in.label;
    j["m"] = c.m;
    std::cout << j.dump() << '\n';
    if (s.status == SearchStatus::inconclusive) return kTruncated;
  }
  return kOk;
}

void add_input(CLI::App* sub, Config& c) {
  auto* named = sub->add_option("--named", c.named, "Named graph (cube, prism6, tetrahedron, ...)");
  auto* input = sub->add_option("-i,--input", c.input, "planar_code file, '-' for stdin");
  named->excludes(input);
  input->excludes(named);
  sub->parse_complete_callback([named, input] {
    if (named->count() + input->count() == 0) throw CLI::RequiredError("--named or --input");
  });
}

void add_run(CLI::App* sub, Config& c) {
  sub->add_option("--nmax", c.n_max, "Largest vertex count")->check(CLI::Range(4, 1 << 16));
  sub->add_option("--threads", c.threads, "Worker threads (default $HEXCUBE_THREADS)")->check(CLI::PositiveNumber);
  sub->add_option("--budget", c.budget, "Wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
  sub->add_option("--checkpoint", c.checkpoint, "Checkpoint path prefix for resumable runs");
  sub->add_option("--report", c.report, "Write the full JSON report here");
}

const std::vector<std::string> kGraphFormats{"json", "plc", "planar_code", "dot"};

// --format beats the extension of -o; json otherwise.
void infer_format(Config& c, const CLI::Option* format) {
  if (format->count() != 0 || c.output.empty()) return;
  auto ends_with = [&](const std::string& ext) {
    return c.output.size() >= ext.size() && c.output.compare(c.output.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".plc") || ends_with(".pc")) c.format = "plc";
  if (ends_with(".dot") || ends_with(".gv")) c.format = "dot";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generation and l1-embedding checks for 3-valent plane graphs with q-gonal and hexagonal faces"};
  app.require_subcommand(1, 1);
  Config c;
  c.threads = default_threads();
  std::function<int(const Config&)> action;

  auto* gen = app.add_subcommand("generate", "Enumerate q_n graphs with n <= nmax");
  gen->add_option("-q", c.q, "Size of the non-hexagonal faces")->check(CLI::IsMember({3, 4, 5}));
  add_run(gen, c);
  gen->add_option("-o,--output", c.output, "Output file (default stdout)");
  auto* gen_format = gen->add_option("--format", c.format, "Output format")->check(CLI::IsMember(kGraphFormats));
  gen->add_option("--filters", c.filters, "zone_clean, partial_cube, five_gonal, bipartite")
      ->delimiter(',')
      ->check(CLI::IsMember({"bipartite", "zone_clean", "partial_cube", "five_gonal"}));
  gen->add_flag("--stats", c.stats, "Include search statistics in the summary");
  gen->callback([&] {
    infer_format(c, gen_format);
    action = cmd_generate;
  });

  auto* check = app.add_subcommand("check", "Report every predicate for the input graphs");
  add_input(check, c);
  check->add_flag("--first-only", c.first_only, "Stop the 5-gonal scan at the first violation");
  check->callback([&] { action = cmd_check; });

  auto* theorem = app.add_subcommand("verify-theorem", "Recognize every 4_n with n <= nmax");
  add_run(theorem, c);
  theorem->callback([&] { action = cmd_verify_theorem; });

  auto* zonecomp = app.add_subcommand("reproduce-zone-computation", "Zone filter over 4_n plus GC(k,l) of the cube");
  add_run(zonecomp, c);
  zonecomp->add_option("--gc-nmax", c.gc_n_max, "Largest GC vertex count")->check(CLI::NonNegativeNumber);
  zonecomp->callback([&] { action = cmd_zone_computation; });

  auto* zones = app.add_subcommand("zones", "Zone report per input graph");
  add_input(zones, c);
  zones->add_flag("--clean-only", c.clean_only, "Write only zone-clean graphs, as a graph stream");
  zones->add_option("-o,--output", c.output, "Output file for --clean-only");
  auto* zones_format = zones->add_option("--format", c.format, "Format for --clean-only")->check(CLI::IsMember(kGraphFormats));
  zones->callback([&] {
    infer_format(c, zones_format);
    action = cmd_zones;
  });

  auto* gc = app.add_subcommand("gc", "Goldberg-Coxeter construction of the cube");
  gc->add_option("-k", c.k, "First parameter")->check(CLI::Range(1, 64));
  gc->add_option("-l", c.l, "Second parameter, 0 <= l <= k")->check(CLI::Range(0, 64));
  gc->add_option("-o,--output", c.output, "Output file (default stdout)");
  auto* gc_format = gc->add_option("--format", c.format, "Output format")->check(CLI::IsMember(kGraphFormats));
  gc->callback([&] {
    if (c.l > c.k) throw CLI::ValidationError("-l", "must not exceed -k");
    infer_format(c, gc_format);
    action = cmd_gc;
  });

  auto* half = app.add_subcommand("embed-halfcube", "Search a scale-2 embedding into the half-cube of dimension m");
  add_input(half, c);
  half->add_option("-m", c.m, "Dimension")->required()->check(CLI::Range(1, 32));
  half->add_option("--placements", c.placements, "Search budget in placements")->check(CLI::PositiveNumber);
  half->callback([&] { action = cmd_embed_halfcube; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    return action(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
