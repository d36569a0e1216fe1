// Command-line front end: hex-grid simulations and checks, birth sequence
// trees and forest savability.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "firefighter/birth_forest.hpp"
#include "firefighter/hex_strategy.hpp"
#include "firefighter/json_io.hpp"
#include "firefighter/render.hpp"

namespace fs = std::filesystem;
namespace strat = firefighter::strategy;
namespace forest = firefighter::forest;
namespace io = firefighter::io;
namespace render = firefighter::render;
using firefighter::hex::HexVertex;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Errors that map to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write " + path.string());
  }
}

void emit(const std::optional<fs::path>& path, const std::string& text) {
  if (path) {
    write_file(*path, text);
  } else {
    std::cout << text;
  }
}

render::RenderWindow fit_window(const firefighter::SimState<firefighter::InfiniteHexGrid>& s,
                                const HexVertex& center, render::Format format) {
  std::int64_t i0 = std::min<std::int64_t>(0, center.i), i1 = std::max<std::int64_t>(0, center.i);
  std::int64_t j0 = 0, j1 = 0;
  auto cover = [&](const HexVertex& v) {
    i0 = std::min(i0, v.i);
    i1 = std::max(i1, v.i);
    j0 = std::min(j0, v.j);
    j1 = std::max(j1, v.j);
  };
  for (const auto& v : s.burning) cover(v);
  for (const auto& v : s.protected_set) cover(v);
  return {i0 - 2, i1 + 2, j0 - 3, j1 + 3, format};
}

struct SimulateArgs {
  int tau_star = 0;
  std::optional<std::string> render_format;
  std::optional<std::string> window;
  double scale = 12.0;
  std::optional<fs::path> out;
  std::optional<fs::path> trace;
  fs::path frames_dir = "frames";
  std::optional<fs::path> schedule;
  std::optional<int> max_turn;
};

int hex_simulate(const SimulateArgs& a) {
  const auto params = strat::make_params(a.tau_star);
  std::optional<render::RenderWindow> window;
  if (a.render_format) {
    const auto format = render::parse_format(*a.render_format);
    if (a.window) {
      window = render::RenderWindow::parse(*a.window, format);
    }
  } else if (a.window) {
    throw std::invalid_argument("--window needs --render");
  }

  const auto result = strat::contain_with_trace(params, a.max_turn);
  auto report = io::report_json(result.report);
  const auto& trace = result.run.trace;

  if (a.trace) {
    std::ostringstream lines;
    io::write_trace_jsonl(lines, trace);
    write_file(*a.trace, lines.str());
  }
  if (a.schedule) {
    write_file(*a.schedule, io::schedule_json(params, strat::build_schedule(params)).dump(2) + "\n");
  }
  if (a.render_format) {
    const auto format = render::parse_format(*a.render_format);
    const render::Markers markers{firefighter::hex::kOrigin, strat::spiral_center(params)};
    if (!window) {
      window = fit_window(trace.final_state(), *markers.center, format);
    }
    std::error_code ec;
    fs::create_directories(a.frames_dir, ec);
    if (ec) {
      throw IoError("cannot create " + a.frames_dir.string() + ": " + ec.message());
    }
    const char* ext = format == render::Format::Svg ? "svg" : "txt";
    std::size_t frames = 0;
    trace.replay([&](const firefighter::SimState<firefighter::InfiniteHexGrid>& s) {
      char name[64];
      std::snprintf(name, sizeof name, "turn_%05d.%s", s.turn, ext);
      write_file(a.frames_dir / name, render::render_frame(s, *window, markers, a.scale));
      ++frames;
    });
    report["frames"] = frames;
  }
  emit(a.out, report.dump(2) + "\n");
  if (!result.report.ok()) {
    std::cerr << "containment failed for tau = " << params.tau << "\n";
    return kFailed;
  }
  return kOk;
}

int hex_verify(int tau_max, bool as_json) {
  bool all = true;
  io::json rows = io::json::array();
  if (!as_json) {
    std::printf("%5s %10s %10s %8s %9s  %s\n", "tau", "contained", "final_turn", "burned",
                "protected", "checks");
  }
  for (int tau = 1; tau <= tau_max; tau += 2) {
    const auto report = strat::contain(strat::make_params(tau));
    all = all && report.ok();
    if (as_json) {
      rows.push_back(io::report_json(report));
      continue;
    }
    std::string checks;
    for (const auto& c : report.checks) {
      if (!c.passed) {
        checks += (checks.empty() ? "FAIL " : ",") + c.name;
      }
    }
    if (report.illegal_move) {
      checks += (checks.empty() ? "FAIL " : ",") + std::string("illegal move");
    }
    if (checks.empty()) {
      checks = "pass";
    }
    std::printf("%5d %10s %10d %8zu %9zu  %s\n", tau, report.contained ? "yes" : "no",
                report.final_turn, report.burned_count, report.protected_count, checks.c_str());
  }
  if (as_json) {
    std::cout << io::json{{"schema", io::kSchemaVersion}, {"results", rows}}.dump(2) << "\n";
  }
  return all ? kOk : kFailed;
}

int tree_check(const std::vector<forest::Count>& birth, std::optional<forest::Count> tail,
               forest::Count k, int horizon) {
  const forest::BirthSequence seq{birth, tail};
  const auto verdict = forest::tree_containable(seq, k, horizon);
  auto doc = io::tree_verdict_json(verdict, k);
  doc["birth"] = birth;
  doc["tail"] = tail ? io::json(*tail) : io::json(nullptr);
  doc["horizon"] = horizon;
  std::cout << doc.dump(2) << "\n";
  return verdict.kind == forest::TreeVerdict::Kind::Containable ? kOk : kFailed;
}

int forest_solve(const fs::path& spec_file, bool witness, bool no_prune) {
  forest::ForestSpec spec;
  try {
    spec = io::load_forest_spec(spec_file);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
  const auto result = forest::leaves_savable(spec, {.prune = !no_prune});
  auto doc = io::savability_json(result, witness);
  doc["pruned"] = !no_prune;
  std::cout << doc.dump(2) << "\n";
  return result.savable ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Firefighter containment simulations and decision procedures"};
  app.require_subcommand(1);

  auto* hex = app.add_subcommand("hex", "Hexagonal grid with one extra firefighter");
  hex->require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = hex->add_subcommand("simulate", "Run the containment schedule and report");
  simulate->add_option("--tau-star", sim.tau_star, "Turn index of the extra firefighter (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--render", sim.render_format, "Write one frame per turn")
      ->check(CLI::IsMember({"svg", "ascii"}));
  simulate->add_option("--window", sim.window, "Frame window i_min:i_max:j_min:j_max");
  simulate->add_option("--scale", sim.scale, "SVG pixels per unit")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--frames-dir", sim.frames_dir, "Directory for rendered frames")
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Report file (default stdout)");
  simulate->add_option("--trace", sim.trace, "JSON-lines trace file");
  simulate->add_option("--schedule", sim.schedule, "Schedule JSON file");
  simulate->add_option("--max-turn", sim.max_turn, "Stop the simulation after this turn")
      ->check(CLI::PositiveNumber);

  int tau_max = 0;
  bool verify_json = false;
  auto* verify = hex->add_subcommand("verify", "Check every odd tau up to --tau-max");
  verify->add_option("--tau-max", tau_max, "Largest tau")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--json", verify_json, "Print full reports as JSON");

  auto* tree = app.add_subcommand("tree", "Birth sequence trees");
  tree->require_subcommand(1);
  std::vector<forest::Count> birth;
  std::optional<forest::Count> tail;
  forest::Count tree_k = 1;
  int horizon = 1000;
  auto* check = tree->add_subcommand("check", "Is the tree k-containable?");
  check->add_option("--birth", birth, "Degrees d_0,d_1,... (comma separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  check->add_option("--tail", tail, "Degree repeated forever after the list")
      ->check(CLI::PositiveNumber);
  check->add_option("--k", tree_k, "Firefighters per turn")->required()->check(CLI::PositiveNumber);
  check->add_option("--horizon", horizon, "Largest depth examined")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto* forest_cmd = app.add_subcommand("forest", "Birth sequence forests");
  forest_cmd->require_subcommand(1);
  fs::path spec_file;
  bool witness = false;
  bool no_prune = false;
  auto* solve = forest_cmd->add_subcommand("solve", "Can every leaf be saved?");
  solve->add_option("spec", spec_file, "Forest spec JSON file")->required();
  solve->add_flag("--witness", witness, "Include a saving strategy");
  solve->add_flag("--no-prune", no_prune, "Build every reachable state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (simulate->parsed()) {
      return hex_simulate(sim);
    }
    if (verify->parsed()) {
      return hex_verify(tau_max, verify_json);
    }
    if (check->parsed()) {
      return tree_check(birth, tail, tree_k, horizon);
    }
    if (solve->parsed()) {
      return forest_solve(spec_file, witness, no_prune);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
