#pragma once

// JSON views of traces, schedules, reports and forest instances. Objects use
// nlohmann's default ordered map, so keys come out sorted; vertex lists are
// sorted before they are written.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "firefighter/birth_forest.hpp"
#include "firefighter/fire_engine.hpp"
#include "firefighter/hex_strategy.hpp"
#include "firefighter/hexgrid.hpp"

namespace firefighter::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json vertex_json(const hex::HexVertex& v);
json vertex_list_json(std::vector<hex::HexVertex> vertices);

// {"burning": [...], "protected": [...], "turn": t}
json state_json(const SimState<InfiniteHexGrid>& state);

// One state_json per line, one line per recorded turn.
void write_trace_jsonl(std::ostream& out, const Trace<InfiniteHexGrid>& trace);

json schedule_json(const strategy::StrategyParams& params,
                   const ProtectionSchedule<hex::HexVertex>& schedule);

json report_json(const strategy::ContainmentReport& report);

json tree_verdict_json(const forest::TreeVerdict& verdict, forest::Count k);

json savability_json(const forest::Savability& result, bool with_witness);

// Throws std::invalid_argument on a missing or mistyped field, then runs
// ForestSpec::validate().
forest::ForestSpec parse_forest_spec(const json& doc);
// Throws std::runtime_error if the file cannot be read or parsed.
forest::ForestSpec load_forest_spec(const std::filesystem::path& path);

json forest_spec_json(const forest::ForestSpec& spec);

}  // namespace firefighter::io
