#pragma once

// Turn-based firefighter process. Turn 1 sets the initial fire; on even
// turns firefighters protect vertices that are not burning; on odd turns the
// fire spreads to every unprotected neighbor of a burning vertex.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "firefighter/hexgrid.hpp"

namespace firefighter {

template <class G>
concept FireGraph = requires(const G& g, const typename G::vertex_type& v) {
  typename G::vertex_hash;
  { g.contains(v) } -> std::convertible_to<bool>;
  { *std::begin(g.neighbors(v)) } -> std::convertible_to<typename G::vertex_type>;
};

struct InfiniteHexGrid {
  using vertex_type = hex::HexVertex;
  using vertex_hash = hex::HexVertexHash;

  bool contains(const vertex_type& v) const { return hex::is_vertex(v); }
  std::array<vertex_type, 3> neighbors(const vertex_type& v) const { return hex::neighbors(v); }
};

// Undirected graph on vertices 0..size()-1.
class FiniteGraph {
 public:
  using vertex_type = int;
  using vertex_hash = std::hash<int>;

  explicit FiniteGraph(int vertex_count)
      : adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {}

  static FiniteGraph path(int vertex_count) {
    FiniteGraph g(vertex_count);
    for (int v = 0; v + 1 < vertex_count; ++v) {
      g.add_edge(v, v + 1);
    }
    return g;
  }

  void add_edge(int u, int v) {
    if (!contains(u) || !contains(v) || u == v) {
      throw std::invalid_argument("FiniteGraph::add_edge: bad endpoints");
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }

  int size() const { return static_cast<int>(adjacency_.size()); }
  bool contains(int v) const { return v >= 0 && v < size(); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

 private:
  std::vector<std::vector<int>> adjacency_;
};

template <FireGraph G>
using VertexSet = std::unordered_set<typename G::vertex_type, typename G::vertex_hash>;

// One snapshot of the process. `frontier` is a cache: it always contains
// every actively burning vertex, and may contain other burning vertices.
template <FireGraph G>
struct SimState {
  using Vertex = typename G::vertex_type;

  std::shared_ptr<const G> graph;
  int turn = 1;
  VertexSet<G> burning;
  VertexSet<G> protected_set;
  VertexSet<G> frontier;
};

template <class V>
class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(int turn, V vertex, const std::string& reason)
      : std::runtime_error(reason), turn_(turn), vertex_(std::move(vertex)) {}

  int turn() const { return turn_; }
  const V& vertex() const { return vertex_; }

 private:
  int turn_;
  V vertex_;
};

namespace detail {

template <class V>
std::string describe(const V& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <FireGraph G>
bool is_free(const SimState<G>& s, const typename G::vertex_type& v) {
  return !s.burning.contains(v) && !s.protected_set.contains(v);
}

template <FireGraph G>
bool has_free_neighbor(const SimState<G>& s, const typename G::vertex_type& u) {
  for (const auto& w : s.graph->neighbors(u)) {
    if (is_free(s, w)) {
      return true;
    }
  }
  return false;
}

template <FireGraph G>
void protect_in_place(SimState<G>& s, std::span<const typename G::vertex_type> vertices) {
  if (s.turn % 2 == 0) {
    throw std::logic_error("protect: called on an even turn");
  }
  const int turn = s.turn + 1;
  VertexSet<G> placed;
  for (const auto& v : vertices) {
    if (!s.graph->contains(v)) {
      throw IllegalMoveError(turn, v, "vertex " + describe(v) + " is not in the graph");
    }
    if (s.burning.contains(v)) {
      throw IllegalMoveError(turn, v, "vertex " + describe(v) + " is burning");
    }
    if (s.protected_set.contains(v)) {
      throw IllegalMoveError(turn, v, "vertex " + describe(v) + " is already protected");
    }
    if (!placed.insert(v).second) {
      throw IllegalMoveError(turn, v, "vertex " + describe(v) + " listed twice");
    }
  }
  s.protected_set.insert(placed.begin(), placed.end());
  s.turn = turn;
}

template <FireGraph G>
void spread_in_place(SimState<G>& s, std::vector<typename G::vertex_type>* newly_burning) {
  if (s.turn % 2 != 0) {
    throw std::logic_error("spread: called on an odd turn");
  }
  std::vector<typename G::vertex_type> ignited;
  for (const auto& u : s.frontier) {
    for (const auto& w : s.graph->neighbors(u)) {
      if (is_free(s, w)) {
        ignited.push_back(w);
      }
    }
  }
  std::sort(ignited.begin(), ignited.end());
  ignited.erase(std::unique(ignited.begin(), ignited.end()), ignited.end());
  s.burning.insert(ignited.begin(), ignited.end());

  VertexSet<G> next;
  for (const auto& u : s.frontier) {
    if (has_free_neighbor(s, u)) {
      next.insert(u);
    }
  }
  for (const auto& u : ignited) {
    if (has_free_neighbor(s, u)) {
      next.insert(u);
    }
  }
  s.frontier = std::move(next);
  s.turn += 1;
  if (newly_burning != nullptr) {
    *newly_burning = std::move(ignited);
  }
}

}  // namespace detail

template <FireGraph G>
SimState<G> initial_state(std::shared_ptr<const G> graph,
                          std::span<const typename G::vertex_type> fire_at) {
  if (!graph) {
    throw std::invalid_argument("initial_state: null graph");
  }
  if (fire_at.empty()) {
    throw std::invalid_argument("initial_state: the initial fire must be nonempty");
  }
  SimState<G> s;
  s.graph = std::move(graph);
  for (const auto& v : fire_at) {
    if (!s.graph->contains(v)) {
      throw std::invalid_argument("initial_state: " + detail::describe(v) + " is not a vertex");
    }
    s.burning.insert(v);
  }
  s.frontier = s.burning;
  return s;
}

inline SimState<InfiniteHexGrid> initial_hex_state(hex::HexVertex fire_at = hex::kOrigin) {
  const std::array<hex::HexVertex, 1> fire{fire_at};
  return initial_state<InfiniteHexGrid>(std::make_shared<const InfiniteHexGrid>(), fire);
}

// Moves from an odd turn to the following even turn, protecting `vertices`.
// Throws IllegalMoveError for burning, already protected, duplicate or
// foreign vertices.
template <FireGraph G>
SimState<G> protect(SimState<G> state, std::span<const typename G::vertex_type> vertices) {
  detail::protect_in_place(state, vertices);
  return state;
}

template <FireGraph G>
SimState<G> protect(SimState<G> state, std::initializer_list<typename G::vertex_type> vertices) {
  detail::protect_in_place(state, std::span(vertices.begin(), vertices.size()));
  return state;
}

// Moves from an even turn to the following odd turn: the closed
// neighborhood of the fire, minus protected vertices, is burning.
template <FireGraph G>
SimState<G> spread(SimState<G> state) {
  detail::spread_in_place(state, nullptr);
  return state;
}

// Unprotected, non-burning vertices with a burning neighbor.
template <FireGraph G>
VertexSet<G> vulnerable(const SimState<G>& state) {
  VertexSet<G> out;
  for (const auto& u : state.frontier) {
    for (const auto& w : state.graph->neighbors(u)) {
      if (detail::is_free(state, w)) {
        out.insert(w);
      }
    }
  }
  return out;
}

// Burning vertices with at least one vulnerable neighbor.
template <FireGraph G>
VertexSet<G> actively_burning(const SimState<G>& state) {
  VertexSet<G> out;
  for (const auto& u : state.frontier) {
    if (detail::has_free_neighbor(state, u)) {
      out.insert(u);
    }
  }
  return out;
}

template <class V>
struct ScheduledMove {
  int turn = 2;
  std::vector<V> vertices;
};

template <class V>
struct ProtectionSchedule {
  std::vector<ScheduledMove<V>> moves;
  int budget = 1;
  std::optional<int> bonus_turn;

  std::size_t allowance(int turn) const {
    const auto extra = (bonus_turn && *bonus_turn == turn) ? 1 : 0;
    return static_cast<std::size_t>(budget + extra);
  }

  std::size_t placement_count() const {
    std::size_t n = 0;
    for (const auto& m : moves) {
      n += m.vertices.size();
    }
    return n;
  }
};

struct Contained {
  int turn = 0;
  std::size_t burned_count = 0;
};

struct NotContainedByMaxTurn {
  int max_turn = 0;
};

template <class V>
struct IllegalMove {
  int turn = 0;
  V vertex{};
  std::string reason;
};

template <class V>
using Outcome = std::variant<Contained, NotContainedByMaxTurn, IllegalMove<V>>;

// The sequence of states visited by a run, stored as the initial state plus
// per-turn additions. Burning and protected sets only grow, so any turn can
// be rebuilt by replaying deltas.
template <FireGraph G>
class Trace {
 public:
  using Vertex = typename G::vertex_type;

  explicit Trace(SimState<G> initial) : initial_(std::move(initial)) {}

  void record(std::vector<Vertex> burned, std::vector<Vertex> protected_now) {
    steps_.push_back({std::move(burned), std::move(protected_now)});
  }

  int first_turn() const { return initial_.turn; }
  int last_turn() const { return initial_.turn + static_cast<int>(steps_.size()); }
  std::size_t size() const { return steps_.size() + 1; }

  const SimState<G>& initial() const { return initial_; }

  SimState<G> state_at(int turn) const {
    if (turn < first_turn() || turn > last_turn()) {
      throw std::out_of_range("Trace::state_at: turn " + std::to_string(turn) + " not recorded");
    }
    SimState<G> s = initial_;
    for (int t = first_turn(); t < turn; ++t) {
      apply(s, steps_[static_cast<std::size_t>(t - first_turn())]);
    }
    s.turn = turn;
    return s;
  }

  SimState<G> final_state() const { return state_at(last_turn()); }

  // Calls fn on every recorded state in turn order.
  template <class Fn>
  void replay(Fn&& fn) const {
    SimState<G> s = initial_;
    fn(static_cast<const SimState<G>&>(s));
    for (const auto& step : steps_) {
      apply(s, step);
      s.turn += 1;
      fn(static_cast<const SimState<G>&>(s));
    }
  }

 private:
  struct Step {
    std::vector<Vertex> burned;
    std::vector<Vertex> protected_now;
  };

  static void apply(SimState<G>& s, const Step& step) {
    s.burning.insert(step.burned.begin(), step.burned.end());
    s.frontier.insert(step.burned.begin(), step.burned.end());
    s.protected_set.insert(step.protected_now.begin(), step.protected_now.end());
  }

  SimState<G> initial_;
  std::vector<Step> steps_;
};

template <FireGraph G>
struct RunResult {
  Trace<G> trace;
  Outcome<typename G::vertex_type> outcome;
  SimState<G> final_state;

  bool contained() const { return std::holds_alternative<Contained>(outcome); }
};

// Alternates protection and spread from turn 1 until the fire can no longer
// reach a new vertex (Contained), until max_turn has been simulated, or until
// a schedule move breaks the rules. Rule violations are reported in the
// outcome rather than thrown.
template <FireGraph G>
RunResult<G> run_schedule(SimState<G> initial,
                          const ProtectionSchedule<typename G::vertex_type>& schedule,
                          int max_turn) {
  using V = typename G::vertex_type;
  if (initial.turn != 1) {
    throw std::invalid_argument("run_schedule: initial state must be at turn 1");
  }
  Trace<G> trace(initial);
  auto finish = [&](Outcome<V> outcome, SimState<G> s) {
    return RunResult<G>{std::move(trace), std::move(outcome), std::move(s)};
  };

  int previous_turn = 0;
  for (const auto& move : schedule.moves) {
    const V first = move.vertices.empty() ? V{} : move.vertices.front();
    if (move.turn <= previous_turn) {
      return finish(IllegalMove<V>{move.turn, first, "schedule turns are not strictly increasing"},
                    initial);
    }
    if (move.turn < 2 || move.turn % 2 != 0) {
      return finish(IllegalMove<V>{move.turn, first, "protection scheduled on an odd turn"},
                    initial);
    }
    const auto allowed = schedule.allowance(move.turn);
    if (move.vertices.size() > allowed) {
      return finish(IllegalMove<V>{move.turn, move.vertices[allowed],
                                   "more placements than the budget allows"},
                    initial);
    }
    previous_turn = move.turn;
  }

  SimState<G> state = std::move(initial);
  if (vulnerable(state).empty()) {
    const auto burned = state.burning.size();
    return finish(Contained{state.turn, burned}, std::move(state));
  }

  std::size_t next = 0;
  const std::vector<V> none;
  while (state.turn < max_turn) {
    const int protect_turn = state.turn + 1;
    const std::vector<V>* placing = &none;
    if (next < schedule.moves.size() && schedule.moves[next].turn == protect_turn) {
      placing = &schedule.moves[next].vertices;
      ++next;
    }
    try {
      detail::protect_in_place(state, std::span<const V>(*placing));
    } catch (const IllegalMoveError<V>& e) {
      return finish(IllegalMove<V>{e.turn(), e.vertex(), e.what()}, std::move(state));
    }
    trace.record({}, *placing);
    if (state.turn >= max_turn) {
      break;
    }

    std::vector<V> ignited;
    detail::spread_in_place(state, &ignited);
    trace.record(std::move(ignited), {});
    if (state.frontier.empty()) {
      const auto burned = state.burning.size();
      return finish(Contained{state.turn, burned}, std::move(state));
    }
  }
  return finish(NotContainedByMaxTurn{max_turn}, std::move(state));
}

}  // namespace firefighter
