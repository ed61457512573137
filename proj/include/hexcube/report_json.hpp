#pragma once

// JSON forms of the reports.  Keys are sorted, so dump() is deterministic.

#include "hexcube/embedding.hpp"
#include "hexcube/generator.hpp"
#include "hexcube/pipeline.hpp"
#include "hexcube/zones.hpp"
#include "json.hpp"

namespace hexcube {

nlohmann::json to_json(const HypercubeEmbedding& e);
nlohmann::json to_json(const FiveGonalWitness& w);
nlohmann::json to_json(const ZoneReport& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const Survivor& s);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const GcStatus& s);
nlohmann::json to_json(const ZoneComputationReport& r);
nlohmann::json to_json(const HalfcubeSearch& s);

/// One generated graph: n, code and rotation lists.
nlohmann::json graph_json(const PlaneGraph& g, const CanonicalCode& code);
/// Counts per n and run status; stats are omitted unless with_stats.
nlohmann::json generation_summary(const GenSpec& spec, const GenResult& r, bool with_stats = false);

}  // namespace hexcube
