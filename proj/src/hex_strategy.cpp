#include "firefighter/hex_strategy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace firefighter::strategy {

namespace {

std::string show(const HexVertex& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::int64_t lower_strip_j(const StrategyParams& p) { return -3 * (p.tau + 1) / 2; }
std::int64_t upper_strip_j(const StrategyParams& p) { return 2 + 3 * (p.tau + 1) / 2; }

}  // namespace

StrategyParams make_params(int tau_star) {
  if (tau_star < 1) {
    throw std::invalid_argument("tau_star must be at least 1");
  }
  return {tau_star, tau_star % 2 == 1 ? tau_star : tau_star + 1};
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::Rays:
      return "rays";
    case Phase::Bonus:
      return "bonus";
    case Phase::Strip:
      return "strip";
    case Phase::Spiral:
      return "spiral";
  }
  return "?";
}

HexVertex spiral_center(const StrategyParams& p) { return {-15LL * p.tau - 13, 0}; }

std::vector<Placement> placements(const StrategyParams& p) {
  const std::int64_t t = p.tau;
  std::vector<Placement> out;
  out.reserve(static_cast<std::size_t>(expected_protected_count(p)));

  // Two rays heading down-left and up-left from f. Empty when tau = 1.
  for (std::int64_t k = 0; 2 * k <= t - 3; ++k) {
    out.push_back({static_cast<int>(4 * k + 2), {1 - k, -1 - 3 * k}, static_cast<int>(2 * k + 1),
                   Phase::Rays});
    out.push_back({static_cast<int>(4 * k + 4), {1 - k, 3 + 3 * k}, static_cast<int>(2 * k + 2),
                   Phase::Rays});
  }

  // Turn 2 tau: both ray tips at once.
  {
    const std::int64_t k = (t - 1) / 2;
    out.push_back({static_cast<int>(2 * t), {1 - k, -1 - 3 * k}, static_cast<int>(t), Phase::Bonus});
    out.push_back({static_cast<int>(2 * t), {1 - k, 3 + 3 * k}, 0, Phase::Bonus});
  }

  // Parallel rays forming the strip.
  const std::int64_t h = (t + 1) / 2;
  for (std::int64_t k = 0; 2 * k <= 15 * t + 11; ++k) {
    out.push_back({static_cast<int>(2 * t + 4 * k + 2), {-h - 2 * k, -3 * h},
                   static_cast<int>(t + 2 * k + 1), Phase::Strip});
    out.push_back({static_cast<int>(2 * t + 4 * k + 4), {-h - 2 * k, 2 + 3 * h},
                   static_cast<int>(t + 2 * k + 2), Phase::Strip});
  }

  // Spiral around c. Labels continue at 16 tau + 14 on turn 32 tau + 28.
  auto spiral = [&](std::int64_t turn, HexVertex v) {
    const auto label = static_cast<int>(turn / 2);
    out.push_back({static_cast<int>(turn), v, label, Phase::Spiral});
  };
  // L1
  for (std::int64_t k = 0; 2 * k <= t - 1; ++k) {
    spiral(4 * k + 32 * t + 28, {(-31 * t - 27) / 2 - 3 * k, (-3 * t - 3) / 2 + 3 * k});
    spiral(4 * k + 32 * t + 30, {(-31 * t - 31) / 2 - 3 * k, (-3 * t + 1) / 2 + 3 * k});
  }
  spiral(34 * t + 30, {-17 * t - 15, 0});
  // L2 \ L1
  for (std::int64_t k = 0; k <= t; ++k) {
    spiral(4 * k + 34 * t + 32, {-17 * t - 15, 6 * k + 2});
    spiral(4 * k + 34 * t + 34, {-17 * t - 15, 6 * k + 6});
  }
  // L3 \ L2
  for (std::int64_t k = 0; k <= 2 * t + 1; ++k) {
    spiral(4 * k + 38 * t + 36, {-17 * t - 13 + 3 * k, 6 * t + 8 + 3 * k});
    spiral(4 * k + 38 * t + 38, {-17 * t - 12 + 3 * k, 6 * t + 9 + 3 * k});
  }
  // L4 \ L3
  for (std::int64_t k = 0; 2 * k <= 7 * t + 3; ++k) {
    spiral(4 * k + 46 * t + 44, {-11 * t - 8 + 3 * k, 12 * t + 11 - 3 * k});
    spiral(4 * k + 46 * t + 46, {-11 * t - 6 + 3 * k, 12 * t + 9 - 3 * k});
  }
  return out;
}

ProtectionSchedule<HexVertex> build_schedule(const StrategyParams& p) {
  ProtectionSchedule<HexVertex> schedule;
  schedule.budget = 1;
  schedule.bonus_turn = 2 * p.tau;
  std::map<int, std::vector<HexVertex>> by_turn;
  for (const auto& pl : placements(p)) {
    by_turn[pl.turn].push_back(pl.vertex);
  }
  for (auto& [turn, vertices] : by_turn) {
    schedule.moves.push_back({turn, std::move(vertices)});
  }
  return schedule;
}

SpiralSegments spiral_segments(const StrategyParams& p) {
  SpiralSegments seg;
  seg.center = spiral_center(p);
  std::vector<HexVertex> spiral;
  for (const auto& pl : placements(p)) {
    if (pl.phase == Phase::Spiral) {
      spiral.push_back(pl.vertex);
    }
  }
  const auto t = static_cast<std::size_t>(p.tau);
  const std::size_t n1 = t + 2;
  const std::size_t n2 = n1 + 2 * t + 2;
  const std::size_t n3 = n2 + 4 * t + 4;
  const std::size_t n4 = n3 + 7 * t + 5;
  if (spiral.size() != n4) {
    throw std::logic_error("spiral_segments: unexpected spiral length");
  }
  seg.l1.assign(spiral.begin(), spiral.begin() + static_cast<std::ptrdiff_t>(n1));
  seg.l2.assign(spiral.begin(), spiral.begin() + static_cast<std::ptrdiff_t>(n2));
  seg.l3.assign(spiral.begin(), spiral.begin() + static_cast<std::ptrdiff_t>(n3));
  seg.l4 = std::move(spiral);
  return seg;
}

HexVertex spiral_successor(const StrategyParams& p) {
  // L4 advances by (+1,-1) and (+2,-2) alternately; its last step was +2.
  const auto seg = spiral_segments(p);
  const auto& last = seg.l4.back();
  return {last.i + 1, last.j - 1};
}

CheckReport verify_observation_distances(const StrategyParams& p,
                                         const std::vector<Placement>& placed) {
  CheckReport report{"observation distances", true, {}};
  const auto c = spiral_center(p);
  const int spiral_base = 16 * p.tau + 14;
  for (const auto& pl : placed) {
    std::int64_t got = 0;
    std::int64_t want = 0;
    const char* from = "f";
    try {
      if (pl.phase == Phase::Spiral) {
        from = "c";
        got = hex::dist_from(c, pl.vertex);
        want = p.tau + (pl.label - spiral_base) + 1;
      } else if (pl.label == 0) {
        got = hex::dist_from_origin(pl.vertex);
        want = p.tau + 1;
      } else {
        got = hex::dist_from_origin(pl.vertex);
        want = pl.label;
      }
    } catch (const std::invalid_argument&) {
      report.fail(show(pl.vertex) + " (label " + std::to_string(pl.label) + ") is not a vertex");
      continue;
    }
    if (got != want) {
      std::ostringstream msg;
      msg << "v_" << pl.label << " = " << pl.vertex << ": dist(" << from << ", v) = " << got
          << ", expected " << want;
      report.fail(msg.str());
    }
  }
  return report;
}

CheckReport verify_observation_distances(const StrategyParams& p) {
  return verify_observation_distances(p, placements(p));
}

CheckReport verify_turn_bookkeeping(const StrategyParams& p, const std::vector<Placement>& placed) {
  CheckReport report{"turn bookkeeping", true, {}};
  std::map<int, int> per_turn;
  for (const auto& pl : placed) {
    ++per_turn[pl.turn];
    std::ostringstream where;
    where << to_string(pl.phase) << " vertex " << pl.vertex << " on turn " << pl.turn;
    if (pl.phase == Phase::Spiral) {
      if (pl.turn != 2 * pl.label) {
        report.fail(where.str() + ": spiral offset and turn disagree");
      }
      continue;
    }
    const bool bonus = pl.label == 0;
    if (bonus ? pl.turn != 2 * p.tau : pl.turn != 2 * pl.label) {
      report.fail(where.str() + ": turn does not match label");
    }
    if (hex::is_vertex(pl.vertex) && 2 * hex::dist_from_origin(pl.vertex) < pl.turn) {
      report.fail(where.str() + ": closer to f than the fire can be excluded from");
    }
  }
  for (int turn = 2; turn <= final_protection_turn(p); turn += 2) {
    const int want = turn == 2 * p.tau ? 2 : 1;
    const auto it = per_turn.find(turn);
    const int got = it == per_turn.end() ? 0 : it->second;
    if (got != want) {
      report.fail("turn " + std::to_string(turn) + " has " + std::to_string(got) +
                  " placements, expected " + std::to_string(want));
    }
  }
  if (per_turn.size() != static_cast<std::size_t>(final_protection_turn(p) / 2)) {
    report.fail("placements outside turns 2.." + std::to_string(final_protection_turn(p)));
  }
  return report;
}

std::vector<HexVertex> strip_lemma_region(const StrategyParams& p) {
  const std::int64_t radius = 16LL * p.tau + 13;
  const auto lo = lower_strip_j(p);
  const auto hi = upper_strip_j(p);
  std::vector<HexVertex> out;
  for (std::int64_t i = -radius; i <= 2; ++i) {
    for (std::int64_t j = lo + 1; j < hi; ++j) {
      if (!hex::is_vertex(i, j)) {
        continue;
      }
      if (-4 + 3 * i < j && j < 6 - 3 * i && hex::dist_from_origin({i, j}) <= radius) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

std::vector<HexVertex> active_ring_region(const StrategyParams& p) {
  // The two segments from (-16tau-13, -1) to ((-31tau-25)/2, (3tau+1)/2) and
  // to ((-31tau-27)/2, (-3tau+1)/2): the left rim of the strip, at distance
  // tau from c and 16 tau + 13 from f.
  const auto c = spiral_center(p);
  const std::int64_t radius = 16LL * p.tau + 13;
  const auto lo = lower_strip_j(p);
  const auto hi = upper_strip_j(p);
  std::vector<HexVertex> out;
  for (std::int64_t i = c.i - p.tau; i <= c.i + p.tau; ++i) {
    for (std::int64_t j = lo + 1; j < hi; ++j) {
      if (hex::is_vertex(i, j) && hex::dist_from(c, {i, j}) == p.tau &&
          hex::dist_from_origin({i, j}) == radius) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

std::vector<HexVertex> active_ring_set_builder(const StrategyParams& p) {
  const auto c = spiral_center(p);
  const auto lo = lower_strip_j(p);
  const auto hi = upper_strip_j(p);
  std::vector<HexVertex> out;
  for (std::int64_t i = c.i - p.tau; i < c.i; ++i) {
    for (std::int64_t j = lo + 1; j < hi; ++j) {
      if (hex::is_vertex(i, j) && hex::dist_from(c, {i, j}) == p.tau) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

namespace {

template <class Set>
void compare_sets(CheckReport& report, const Set& observed, std::vector<HexVertex> expected,
                  const char* observed_name) {
  std::vector<HexVertex> got(observed.begin(), observed.end());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  std::vector<HexVertex> missing;
  std::vector<HexVertex> extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  constexpr std::size_t kShown = 8;
  for (std::size_t n = 0; n < missing.size() && n < kShown; ++n) {
    report.fail(show(missing[n]) + " predicted but not " + observed_name);
  }
  for (std::size_t n = 0; n < extra.size() && n < kShown; ++n) {
    report.fail(show(extra[n]) + " " + observed_name + " but not predicted");
  }
  if (missing.size() + extra.size() > 2 * kShown) {
    report.fail(std::to_string(missing.size()) + " missing, " + std::to_string(extra.size()) +
                " extra in total");
  }
}

SimState<InfiniteHexGrid> checkpoint_state(const StrategyParams& p,
                                           const Trace<InfiniteHexGrid>& trace) {
  const int turn = strip_checkpoint_turn(p);
  if (trace.last_turn() < turn) {
    throw std::invalid_argument("trace ends at turn " + std::to_string(trace.last_turn()) +
                                ", before turn " + std::to_string(turn));
  }
  return trace.state_at(turn);
}

}  // namespace

CheckReport verify_strip_lemma(const StrategyParams& p, const Trace<InfiniteHexGrid>& trace) {
  const auto state = checkpoint_state(p, trace);
  CheckReport report{"strip lemma", true, {}};
  compare_sets(report, state.burning, strip_lemma_region(p), "burning");
  return report;
}

CheckReport verify_active_ring(const StrategyParams& p, const Trace<InfiniteHexGrid>& trace) {
  const auto state = checkpoint_state(p, trace);
  CheckReport report{"active ring", true, {}};
  const auto active = actively_burning(state);
  const auto c = spiral_center(p);
  for (const auto& v : active) {
    if (hex::dist_from(c, v) != p.tau) {
      report.fail(show(v) + " is actively burning at distance " +
                  std::to_string(hex::dist_from(c, v)) + " from c");
    }
  }
  compare_sets(report, active, active_ring_region(p), "actively burning");
  return report;
}

CheckReport compare_active_ring_set_builder(const StrategyParams& p,
                                            const Trace<InfiniteHexGrid>& trace) {
  const auto state = checkpoint_state(p, trace);
  CheckReport report{"active ring (set-builder form)", true, {}};
  compare_sets(report, actively_burning(state), active_ring_set_builder(p), "actively burning");
  return report;
}

bool ContainmentReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

ContainmentRun contain_with_trace(const StrategyParams& p, std::optional<int> max_turn) {
  const auto placed = placements(p);
  const auto schedule = build_schedule(p);
  auto run = run_schedule(initial_hex_state(), schedule, max_turn.value_or(default_max_turn(p)));

  ContainmentReport report;
  report.params = p;
  report.protected_count = run.final_state.protected_set.size();
  report.burned_count = run.final_state.burning.size();
  report.final_turn = run.final_state.turn;
  if (const auto* done = std::get_if<Contained>(&run.outcome)) {
    report.contained = true;
    report.final_turn = done->turn;
  } else if (const auto* bad = std::get_if<IllegalMove<HexVertex>>(&run.outcome)) {
    report.illegal_move = "turn " + std::to_string(bad->turn) + ": " + bad->reason;
  }

  report.checks.push_back(verify_observation_distances(p, placed));
  report.checks.push_back(verify_turn_bookkeeping(p, placed));
  if (run.trace.last_turn() >= strip_checkpoint_turn(p)) {
    report.checks.push_back(verify_strip_lemma(p, run.trace));
    report.checks.push_back(verify_active_ring(p, run.trace));
  } else {
    for (const char* name : {"strip lemma", "active ring"}) {
      CheckReport skipped{name, true, {}};
      skipped.fail("run ended at turn " + std::to_string(run.trace.last_turn()));
      report.checks.push_back(std::move(skipped));
    }
  }

  CheckReport closure{"spiral closure", true, {}};
  const auto successor = spiral_successor(p);
  const bool hits_upper_ray = std::any_of(placed.begin(), placed.end(), [&](const Placement& pl) {
    return pl.phase != Phase::Spiral && pl.vertex == successor && pl.vertex.j > 0;
  });
  if (!hits_upper_ray) {
    closure.fail("vertex after L4 " + show(successor) + " is not on the upper ray");
  }
  if (static_cast<int>(report.protected_count) != expected_protected_count(p)) {
    closure.fail("protected " + std::to_string(report.protected_count) + " vertices, expected " +
                 std::to_string(expected_protected_count(p)));
  }
  report.checks.push_back(std::move(closure));

  return {std::move(report), std::move(run)};
}

ContainmentReport contain(const StrategyParams& p) { return contain_with_trace(p).report; }

}  // namespace firefighter::strategy
