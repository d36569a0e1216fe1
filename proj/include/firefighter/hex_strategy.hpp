#pragma once

// One-extra-firefighter containment on the hexagonal grid. With one
// firefighter per turn and a second one available on turn 2*tau_star, the
// schedule builds two rays, bends them into a strip running to the left,
// and closes the lower ray into a clockwise spiral around
// c = (-15 tau - 13, 0) that meets the upper ray.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firefighter/fire_engine.hpp"
#include "firefighter/hexgrid.hpp"

namespace firefighter::strategy {

using hex::HexVertex;

struct StrategyParams {
  int tau_star = 1;
  int tau = 1;  // always odd: tau_star, or tau_star + 1 when tau_star is even
};

// Throws std::invalid_argument when tau_star < 1.
StrategyParams make_params(int tau_star);

enum class Phase { Rays, Bonus, Strip, Spiral };

const char* to_string(Phase phase);

// A protected vertex together with its bookkeeping. `label` is r for the
// vertex v_r; the extra upper vertex placed on the bonus turn carries no
// label (0).
struct Placement {
  int turn = 0;
  HexVertex vertex;
  int label = 0;
  Phase phase = Phase::Rays;
};

// Every placement of the strategy in turn order, computed from the explicit
// per-phase turn formulas.
std::vector<Placement> placements(const StrategyParams& params);

// Groups placements() by turn. Budget 1 with the bonus on turn 2*tau.
ProtectionSchedule<HexVertex> build_schedule(const StrategyParams& params);

struct SpiralSegments {
  HexVertex center;
  std::vector<HexVertex> l1;  // tau + 2 vertices
  std::vector<HexVertex> l2;  // l1 followed by 2 tau + 2 more
  std::vector<HexVertex> l3;  // l2 followed by 4 tau + 4 more
  std::vector<HexVertex> l4;  // l3 followed by 7 tau + 5 more
};

SpiralSegments spiral_segments(const StrategyParams& params);

HexVertex spiral_center(const StrategyParams& params);

// The vertex one step past the end of L4 in L4's direction. It coincides
// with v_{tau+2}, the first upper-ray vertex of the strip.
HexVertex spiral_successor(const StrategyParams& params);

constexpr int final_protection_turn(const StrategyParams& p) { return 60 * p.tau + 52; }
constexpr int strip_checkpoint_turn(const StrategyParams& p) { return 32 * p.tau + 27; }
constexpr int expected_protected_count(const StrategyParams& p) { return 30 * p.tau + 27; }
constexpr int default_max_turn(const StrategyParams& p) { return 80 * p.tau + 200; }

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    passed = false;
    violations.push_back(std::move(message));
  }
};

// dist(f, v_r) = r for r = 1..16 tau + 13 (the unlabeled bonus vertex at
// distance tau + 1), and dist(c, v_{s+16tau+14}) = tau + s + 1 for the
// spiral. Works on any placement list so mutated schedules can be checked.
CheckReport verify_observation_distances(const StrategyParams& params,
                                         const std::vector<Placement>& placed);
CheckReport verify_observation_distances(const StrategyParams& params);

// Turn bookkeeping: v_r on turn 2r through the strip, bonus vertex on 2 tau,
// spiral offset s on turn 2s + 32 tau + 28, one vertex per even turn
// otherwise, and dist(f, v) >= turn / 2 for every ray and strip vertex.
CheckReport verify_turn_bookkeeping(const StrategyParams& params,
                                    const std::vector<Placement>& placed);

// Burning set after the spread on turn 32 tau + 27 equals
// {dist(f,v) <= 16 tau + 13, -4 + 3i < j < 6 - 3i,
//  -3(tau+1)/2 < j < 2 + 3(tau+1)/2}.
// Throws std::invalid_argument if the trace stops earlier.
CheckReport verify_strip_lemma(const StrategyParams& params, const Trace<InfiniteHexGrid>& trace);

// Every actively burning vertex after that spread is at distance tau from c,
// and the actively burning set is exactly active_ring_region().
CheckReport verify_active_ring(const StrategyParams& params, const Trace<InfiniteHexGrid>& trace);

// Compares the actively burning set with {dist(c,v) = tau, strip j bounds,
// i < -15 tau - 13}. That set also holds interior vertices of the strip for
// tau >= 5 and misses the upper rim end (-28, 2) for tau = 1, so this is a
// diagnostic and not part of contain().
CheckReport compare_active_ring_set_builder(const StrategyParams& params,
                                            const Trace<InfiniteHexGrid>& trace);

// The set each of the two checks above compares against.
std::vector<HexVertex> strip_lemma_region(const StrategyParams& params);
// The rim of the strip: strip vertices at distance 16 tau + 13 from f and
// tau from c.
std::vector<HexVertex> active_ring_region(const StrategyParams& params);
std::vector<HexVertex> active_ring_set_builder(const StrategyParams& params);

struct ContainmentReport {
  StrategyParams params;
  bool contained = false;
  int final_turn = 0;
  std::size_t burned_count = 0;
  std::size_t protected_count = 0;
  std::optional<std::string> illegal_move;
  std::vector<CheckReport> checks;

  bool all_checks_passed() const;
  bool ok() const { return contained && !illegal_move && all_checks_passed(); }
};

struct ContainmentRun {
  ContainmentReport report;
  RunResult<InfiniteHexGrid> run;
};

// Builds the schedule, runs it from a single fire at the origin and runs
// every verifier on the resulting trace.
ContainmentRun contain_with_trace(const StrategyParams& params, std::optional<int> max_turn = {});
ContainmentReport contain(const StrategyParams& params);

}  // namespace firefighter::strategy
