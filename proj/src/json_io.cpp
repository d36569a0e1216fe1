#include "firefighter/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace firefighter::io {

json vertex_json(const hex::HexVertex& v) { return json::array({v.i, v.j}); }

json vertex_list_json(std::vector<hex::HexVertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  json out = json::array();
  for (const auto& v : vertices) {
    out.push_back(vertex_json(v));
  }
  return out;
}

json state_json(const SimState<InfiniteHexGrid>& state) {
  return {
      {"turn", state.turn},
      {"burning", vertex_list_json({state.burning.begin(), state.burning.end()})},
      {"protected", vertex_list_json({state.protected_set.begin(), state.protected_set.end()})},
  };
}

void write_trace_jsonl(std::ostream& out, const Trace<InfiniteHexGrid>& trace) {
  trace.replay([&](const SimState<InfiniteHexGrid>& s) { out << state_json(s).dump() << '\n'; });
}

json schedule_json(const strategy::StrategyParams& params,
                   const ProtectionSchedule<hex::HexVertex>& schedule) {
  json moves = json::array();
  for (const auto& move : schedule.moves) {
    moves.push_back({{"turn", move.turn}, {"vertices", vertex_list_json(move.vertices)}});
  }
  return {{"tau_star", params.tau_star}, {"tau", params.tau}, {"moves", std::move(moves)}};
}

json report_json(const strategy::ContainmentReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"violations", c.violations}});
  }
  json out = {
      {"schema", kSchemaVersion},
      {"tau_star", report.params.tau_star},
      {"tau", report.params.tau},
      {"contained", report.contained},
      {"final_turn", report.final_turn},
      {"burned_count", report.burned_count},
      {"protected_count", report.protected_count},
      {"checks", std::move(checks)},
      {"ok", report.ok()},
  };
  out["illegal_move"] = report.illegal_move ? json(*report.illegal_move) : json(nullptr);
  return out;
}

json tree_verdict_json(const forest::TreeVerdict& verdict, forest::Count k) {
  json out = {
      {"schema", kSchemaVersion},
      {"k", k},
      {"verdict", forest::to_string(verdict.kind)},
      {"checked", verdict.checked},
  };
  out["depth"] = verdict.kind == forest::TreeVerdict::Kind::Containable ? json(verdict.depth)
                                                                        : json(nullptr);
  return out;
}

json savability_json(const forest::Savability& result, bool with_witness) {
  json out = {
      {"schema", kSchemaVersion},
      {"savable", result.savable},
      {"states", result.states},
      {"edges", result.edges},
      {"early_reject", result.early_reject},
  };
  if (with_witness) {
    out["witness"] = result.witness ? json(*result.witness) : json(nullptr);
  }
  return out;
}

namespace {

template <typename T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) {
    throw std::invalid_argument(std::string("forest spec: missing field '") + name + "'");
  }
  const auto& value = doc.at(name);
  const bool integral = value.is_number_integer() ||
                        (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& row) {
                           return row.is_array() && std::all_of(row.begin(), row.end(), [](const json& x) {
                                    return x.is_number_integer();
                                  });
                         }));
  if (!integral) {
    throw std::invalid_argument(std::string("forest spec: field '") + name + "' must hold integers");
  }
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("forest spec: field '") + name + "' has the wrong type");
  }
}

}  // namespace

forest::ForestSpec parse_forest_spec(const json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("forest spec: expected a JSON object");
  }
  forest::ForestSpec spec;
  spec.m = field<int>(doc, "m");
  spec.n = field<int>(doc, "n");
  spec.k = field<forest::Count>(doc, "k");
  spec.d = field<std::vector<forest::IntVec>>(doc, "d");
  spec.validate();
  return spec;
}

forest::ForestSpec load_forest_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return parse_forest_spec(doc);
}

json forest_spec_json(const forest::ForestSpec& spec) {
  return {{"m", spec.m}, {"n", spec.n}, {"k", spec.k}, {"d", spec.d}};
}

}  // namespace firefighter::io
