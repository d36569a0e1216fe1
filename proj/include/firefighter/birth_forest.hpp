#pragma once

// Firefighting on birth sequence trees and forests with every root burning.
// A birth sequence tree has d_i children at every depth-i vertex; a forest of
// m such trees is described row by row, row i holding d_i for each tree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace firefighter::forest {

using Count = std::int64_t;
using IntVec = std::vector<Count>;
using BigInt = boost::multiprecision::cpp_int;

// Component-wise vector algebra. All throw std::invalid_argument on length
// mismatch.
IntVec hadamard(const IntVec& a, const IntVec& b);
// Product of all factors; the empty product is the all-ones vector of
// length m.
IntVec hadamard_product(std::span<const IntVec> factors, std::size_t m);
IntVec cwise_max(const IntVec& a, const IntVec& b);
IntVec cwise_sub(const IntVec& a, const IntVec& b);
bool cwise_leq(const IntVec& a, const IntVec& b);
Count l1_norm(const IntVec& a);

// ---------------------------------------------------------------------------
// Single trees

struct BirthSequence {
  std::vector<Count> prefix;
  std::optional<Count> tail;  // every degree past the prefix, if infinite

  // Throws std::invalid_argument for an empty prefix or a degree < 1.
  void validate() const;
  bool infinite() const { return tail.has_value(); }
  // Throws std::out_of_range past the end of a finite sequence.
  Count degree(std::size_t depth) const;
};

// f_0 = 1, f_t = max{0, f_{t-1} d_{t-1} - k}: burning vertices at depth t
// under any hot strategy. Also evaluates the closed form at every t >= 1
// and throws std::logic_error if they disagree. Throws std::overflow_error
// if a count leaves the int64 range.
std::vector<Count> tree_fire_counts(const BirthSequence& seq, Count k, int t_max);

// prod_{i<t} d_i - k (1 + sum_{i=1}^{t-1} prod_{j=i}^{t-1} d_j), the
// unclamped closed form for f_t (t >= 1). Evaluated term by term.
BigInt tree_closed_form(const BirthSequence& seq, Count k, int t);

struct TreeVerdict {
  enum class Kind { Containable, NotContainableWithinHorizon, ProvablyNotContainable };
  Kind kind = Kind::NotContainableWithinHorizon;
  int depth = 0;    // fire dies out at this depth when Containable
  int checked = 0;  // largest t examined
};

const char* to_string(TreeVerdict::Kind kind);

// Looks for the first t <= horizon with
// prod_{i<=t} d_i - k (1 + sum_{i=1}^{t} prod_{j=i}^{t} d_j) <= 0.
// With an eventually constant tail d, reports ProvablyNotContainable once
// the tail is reached with f_t >= 1 and f_t d - k >= f_t.
TreeVerdict tree_containable(const BirthSequence& seq, Count k, int horizon);

// ---------------------------------------------------------------------------
// Forests

struct ForestSpec {
  int m = 1;                  // trees
  int n = 1;                  // depth; leaves sit at depth n
  Count k = 1;                // firefighters per even turn
  std::vector<IntVec> d;      // n rows of m degrees, d[i][j] for tree j at depth i

  // Throws std::invalid_argument on shape or range errors.
  void validate() const;
  std::size_t vertex_count() const;
};

// p_1..p_n, entry t-1 is the vector used on the t-th protection turn.
using StrategySequence = std::vector<IntVec>;

// f_0 = 1, f_t = max{0, f_{t-1} (.) d_{t-1} - p_t} for t = 1..n. The closed
// form for each f_t is checked alongside (std::logic_error on mismatch).
std::vector<IntVec> forest_fire_counts(const ForestSpec& spec, const StrategySequence& strategy);

// prod_{i<t} d_i - sum_{i=1}^{t-1} p_i prod_{j=i}^{t-1} d_j - p_t, unclamped.
IntVec forest_closed_form(const ForestSpec& spec, const StrategySequence& strategy, int t);

// All non-negative m-vectors with L1 norm exactly k (exact) or at most k,
// in descending lexicographic order.
std::vector<IntVec> budget_vectors(int m, Count k, bool exact);

struct StateNode {
  int t = 0;
  IntVec f;

  friend auto operator<=>(const StateNode&, const StateNode&) = default;
};

struct StateEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Index of the budget vector p in StateGraph::budgets for a regular edge;
  // empty for the edge taken when every fire at the next depth can be
  // covered at once.
  std::optional<std::size_t> budget;
};

struct StateGraph {
  std::vector<StateNode> nodes;
  std::vector<StateEdge> edges;
  std::vector<IntVec> budgets;  // every p with ||p||_1 = k, descending lex
  std::size_t start = 0;
  std::optional<std::size_t> goal;  // (n, 0) when present
  bool pruned = true;

  std::optional<std::size_t> find(const StateNode& node) const;
};

struct BuildOptions {
  // Drop states with more than k (n - t) fires. Without it the graph holds
  // every state reachable from the start.
  bool prune = true;
};

StateGraph build_state_graph(const ForestSpec& spec, BuildOptions options = {});

struct Savability {
  bool savable = false;
  std::optional<StrategySequence> witness;
  std::size_t states = 0;
  std::size_t edges = 0;
  bool early_reject = false;  // m > n k
};

// Can k firefighters per turn keep the fire off every leaf? Decided by
// reachability of (n, 0) from (0, 1) in the state graph.
Savability leaves_savable(const ForestSpec& spec, BuildOptions options = {});

// Exhaustive search over every strategy sequence with ||p_t||_1 <= k.
// Subtrees that already failed from the same (t, f) are not re-explored.
// Throws std::length_error when m n > 12.
bool brute_force_hot_oracle(const ForestSpec& spec);

// A rooted forest spelled out vertex by vertex.
struct ExplicitForest {
  std::vector<int> parent;  // -1 for roots
  std::vector<int> depth;
  int height = 0;           // leaves are the vertices at this depth

  static ExplicitForest expand(const ForestSpec& spec);
  std::size_t size() const { return parent.size(); }
};

// Searches every placement strategy (any unburned vertices, hot or not) on
// the explicit forest with all roots burning. True iff some strategy keeps
// every leaf from burning. Throws std::length_error above 40 vertices.
bool game_tree_oracle(const ExplicitForest& forest, Count k);

}  // namespace firefighter::forest
