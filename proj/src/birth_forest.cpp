#include "firefighter/birth_forest.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace firefighter::forest {

namespace {

void require_same_length(const IntVec& a, const IntVec& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": vectors of length " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("fire count overflows int64");
  }
  return out;
}

Count checked_sub(Count a, Count b) {
  Count out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("fire count overflows int64");
  }
  return out;
}

}  // namespace

IntVec hadamard(const IntVec& a, const IntVec& b) {
  require_same_length(a, b, "hadamard");
  IntVec out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = a[j] * b[j];
  }
  return out;
}

IntVec hadamard_product(std::span<const IntVec> factors, std::size_t m) {
  IntVec out(m, 1);
  for (const auto& f : factors) {
    out = hadamard(out, f);
  }
  return out;
}

IntVec cwise_max(const IntVec& a, const IntVec& b) {
  require_same_length(a, b, "cwise_max");
  IntVec out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = std::max(a[j], b[j]);
  }
  return out;
}

IntVec cwise_sub(const IntVec& a, const IntVec& b) {
  require_same_length(a, b, "cwise_sub");
  IntVec out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = a[j] - b[j];
  }
  return out;
}

bool cwise_leq(const IntVec& a, const IntVec& b) {
  require_same_length(a, b, "cwise_leq");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) {
      return false;
    }
  }
  return true;
}

Count l1_norm(const IntVec& a) {
  Count s = 0;
  for (auto x : a) {
    s += x < 0 ? -x : x;
  }
  return s;
}

// ---------------------------------------------------------------------------

void BirthSequence::validate() const {
  if (prefix.empty()) {
    throw std::invalid_argument("birth sequence: empty prefix");
  }
  for (auto d : prefix) {
    if (d < 1) {
      throw std::invalid_argument("birth sequence: degrees must be at least 1");
    }
  }
  if (tail && *tail < 1) {
    throw std::invalid_argument("birth sequence: tail degree must be at least 1");
  }
}

Count BirthSequence::degree(std::size_t depth) const {
  if (depth < prefix.size()) {
    return prefix[depth];
  }
  if (tail) {
    return *tail;
  }
  throw std::out_of_range("birth sequence: depth " + std::to_string(depth) +
                          " past the end of a finite tree");
}

BigInt tree_closed_form(const BirthSequence& seq, Count k, int t) {
  if (t < 1) {
    throw std::invalid_argument("tree_closed_form: t must be at least 1");
  }
  BigInt whole = 1;
  for (int i = 0; i < t; ++i) {
    whole *= seq.degree(static_cast<std::size_t>(i));
  }
  BigInt tails = 0;
  for (int i = 1; i <= t - 1; ++i) {
    BigInt term = 1;
    for (int j = i; j <= t - 1; ++j) {
      term *= seq.degree(static_cast<std::size_t>(j));
    }
    tails += term;
  }
  return whole - BigInt(k) * (1 + tails);
}

std::vector<Count> tree_fire_counts(const BirthSequence& seq, Count k, int t_max) {
  seq.validate();
  if (t_max < 0) {
    throw std::invalid_argument("tree_fire_counts: negative t_max");
  }
  std::vector<Count> f{1};
  for (int t = 1; t <= t_max; ++t) {
    const auto d = seq.degree(static_cast<std::size_t>(t - 1));
    const auto next = std::max<Count>(0, checked_sub(checked_mul(f.back(), d), k));
    const BigInt closed = tree_closed_form(seq, k, t);
    if (BigInt(next) != (closed > 0 ? closed : BigInt(0))) {
      throw std::logic_error("tree_fire_counts: recurrence and closed form disagree at t = " +
                             std::to_string(t));
    }
    f.push_back(next);
  }
  return f;
}

const char* to_string(TreeVerdict::Kind kind) {
  switch (kind) {
    case TreeVerdict::Kind::Containable:
      return "containable";
    case TreeVerdict::Kind::NotContainableWithinHorizon:
      return "not-containable-within-horizon";
    case TreeVerdict::Kind::ProvablyNotContainable:
      return "provably-not-containable";
  }
  return "?";
}

TreeVerdict tree_containable(const BirthSequence& seq, Count k, int horizon) {
  seq.validate();
  if (horizon < 0) {
    throw std::invalid_argument("tree_containable: negative horizon");
  }
  // prod_{i<=t} d_i and sum_{i=1}^{t} prod_{j=i}^{t} d_j, kept incrementally.
  BigInt whole = 1;
  BigInt tails = 0;
  BigInt fires = 1;  // f_t from the recurrence
  TreeVerdict verdict;
  for (int t = 0; t <= horizon; ++t) {
    const auto at = static_cast<std::size_t>(t);
    if (!seq.infinite() && at >= seq.prefix.size()) {
      break;
    }
    verdict.checked = t;
    const BigInt d = seq.degree(at);
    whole *= d;
    tails = t == 0 ? BigInt(0) : d * (tails + 1);
    const BigInt expression = whole - BigInt(k) * (1 + tails);

    BigInt next = fires * d - k;
    if (next < 0) {
      next = 0;
    }
    if ((expression <= 0) != (next == 0)) {
      throw std::logic_error("tree_containable: closed form and recurrence disagree at t = " +
                             std::to_string(t));
    }
    if (expression <= 0) {
      verdict.kind = TreeVerdict::Kind::Containable;
      verdict.depth = t + 1;
      return verdict;
    }
    // In the constant tail f -> max{0, f d - k} is monotone, so a fire count
    // that does not shrink in one step never shrinks again.
    if (seq.infinite() && at >= seq.prefix.size() && next >= fires) {
      verdict.kind = TreeVerdict::Kind::ProvablyNotContainable;
      return verdict;
    }
    fires = next;
  }
  verdict.kind = TreeVerdict::Kind::NotContainableWithinHorizon;
  return verdict;
}

// ---------------------------------------------------------------------------

void ForestSpec::validate() const {
  if (m < 1 || n < 1 || k < 1) {
    throw std::invalid_argument("forest spec: m, n and k must be at least 1");
  }
  if (d.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("forest spec: expected " + std::to_string(n) +
                                " degree rows, got " + std::to_string(d.size()));
  }
  for (const auto& row : d) {
    if (row.size() != static_cast<std::size_t>(m)) {
      throw std::invalid_argument("forest spec: every degree row needs " + std::to_string(m) +
                                  " entries");
    }
    for (auto x : row) {
      if (x < 1) {
        throw std::invalid_argument("forest spec: degrees must be at least 1");
      }
    }
  }
}

std::size_t ForestSpec::vertex_count() const {
  std::size_t total = 0;
  for (int j = 0; j < m; ++j) {
    std::size_t level = 1;
    total += level;
    for (int i = 0; i < n; ++i) {
      level *= static_cast<std::size_t>(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      total += level;
    }
  }
  return total;
}

namespace {

void validate_strategy(const ForestSpec& spec, const StrategySequence& strategy) {
  if (strategy.size() < static_cast<std::size_t>(spec.n)) {
    throw std::invalid_argument("strategy sequence shorter than the forest depth");
  }
  for (const auto& p : strategy) {
    if (p.size() != static_cast<std::size_t>(spec.m)) {
      throw std::invalid_argument("strategy vector of the wrong length");
    }
    if (std::any_of(p.begin(), p.end(), [](Count x) { return x < 0; })) {
      throw std::invalid_argument("strategy vector with a negative entry");
    }
    if (l1_norm(p) > spec.k) {
      throw std::invalid_argument("strategy vector uses more than k firefighters");
    }
  }
}

}  // namespace

IntVec forest_closed_form(const ForestSpec& spec, const StrategySequence& strategy, int t) {
  if (t < 1 || t > spec.n) {
    throw std::invalid_argument("forest_closed_form: t out of range");
  }
  const auto m = static_cast<std::size_t>(spec.m);
  const std::span<const IntVec> rows(spec.d);
  IntVec out = hadamard_product(rows.subspan(0, static_cast<std::size_t>(t)), m);
  for (int i = 1; i <= t - 1; ++i) {
    const auto tail = hadamard_product(
        rows.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(t - i)), m);
    out = cwise_sub(out, hadamard(strategy[static_cast<std::size_t>(i - 1)], tail));
  }
  return cwise_sub(out, strategy[static_cast<std::size_t>(t - 1)]);
}

std::vector<IntVec> forest_fire_counts(const ForestSpec& spec, const StrategySequence& strategy) {
  spec.validate();
  validate_strategy(spec, strategy);
  const auto m = static_cast<std::size_t>(spec.m);
  const IntVec zero(m, 0);
  std::vector<IntVec> f{IntVec(m, 1)};
  for (int t = 1; t <= spec.n; ++t) {
    const auto& d = spec.d[static_cast<std::size_t>(t - 1)];
    const auto& p = strategy[static_cast<std::size_t>(t - 1)];
    auto next = cwise_max(zero, cwise_sub(hadamard(f.back(), d), p));
    if (cwise_max(zero, forest_closed_form(spec, strategy, t)) != next) {
      throw std::logic_error("forest_fire_counts: recurrence and closed form disagree at t = " +
                             std::to_string(t));
    }
    f.push_back(std::move(next));
  }
  return f;
}

std::vector<IntVec> budget_vectors(int m, Count k, bool exact) {
  if (m < 1 || k < 0) {
    throw std::invalid_argument("budget_vectors: need m >= 1 and k >= 0");
  }
  std::vector<IntVec> out;
  IntVec current(static_cast<std::size_t>(m), 0);
  std::function<void(std::size_t, Count)> fill = [&](std::size_t pos, Count remaining) {
    if (pos + 1 == current.size()) {
      for (Count v = remaining; v >= (exact ? remaining : 0); --v) {
        current[pos] = v;
        out.push_back(current);
      }
      return;
    }
    for (Count v = remaining; v >= 0; --v) {
      current[pos] = v;
      fill(pos + 1, remaining - v);
    }
  };
  fill(0, k);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Packs a vector with entries in [0, base) into one integer when that fits.
class RadixKey {
 public:
  RadixKey(std::size_t m, Count bound) : base_(static_cast<std::uint64_t>(bound) + 1) {
    std::uint64_t cells = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (cells > std::numeric_limits<std::uint64_t>::max() / 4 / base_) {
        fits_ = false;
        return;
      }
      cells *= base_;
    }
    cells_ = cells;
  }

  bool fits() const { return fits_; }
  std::uint64_t cells() const { return cells_; }

  std::optional<std::uint64_t> operator()(const IntVec& f) const {
    std::uint64_t key = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      if (*it < 0 || static_cast<std::uint64_t>(*it) >= base_) {
        return std::nullopt;
      }
      key = key * base_ + static_cast<std::uint64_t>(*it);
    }
    return key;
  }

 private:
  std::uint64_t base_;
  std::uint64_t cells_ = 0;
  bool fits_ = true;
};

// Node ids of one depth layer, keyed by the fire vector: a flat table for
// small layers, a hash on the packed key for larger ones, an ordered map when
// the key would not fit in 64 bits.
class LayerIndex {
 public:
  LayerIndex(std::size_t m, Count bound) : key_(m, bound) {
    if (key_.fits() && key_.cells() <= kFlatLimit) {
      table_.assign(key_.cells(), kAbsent);
    }
  }

  std::optional<std::size_t> get(const IntVec& f) const {
    if (!key_.fits()) {
      const auto it = map_.find(f);
      return it == map_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }
    const auto key = key_(f);
    if (!key) {
      return std::nullopt;
    }
    if (!table_.empty()) {
      const auto id = table_[*key];
      return id == kAbsent ? std::nullopt : std::optional<std::size_t>(id);
    }
    const auto it = hashed_.find(*key);
    return it == hashed_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }

  void put(const IntVec& f, std::size_t id) {
    if (!key_.fits()) {
      map_[f] = id;
      return;
    }
    const auto key = key_(f);
    if (!key) {
      throw std::logic_error("state outside the layer bound");
    }
    if (!table_.empty()) {
      table_[*key] = id;
    } else {
      hashed_[*key] = id;
    }
  }

 private:
  static constexpr std::uint64_t kFlatLimit = 4096;
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  RadixKey key_;
  std::vector<std::size_t> table_;
  std::unordered_map<std::uint64_t, std::size_t> hashed_;
  std::map<IntVec, std::size_t> map_;
};

struct GraphBuilder {
  const ForestSpec& spec;
  StateGraph graph;
  std::vector<LayerIndex> layers;

  std::size_t add_node(int t, const IntVec& f) {
    auto& layer = layers[static_cast<std::size_t>(t)];
    if (auto id = layer.get(f)) {
      return *id;
    }
    const auto id = graph.nodes.size();
    layer.put(f, id);
    graph.nodes.push_back({t, f});
    return id;
  }
};

Count max_component(const IntVec& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

std::optional<std::size_t> StateGraph::find(const StateNode& node) const {
  const auto it = std::find(nodes.begin(), nodes.end(), node);
  if (it == nodes.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

StateGraph build_state_graph(const ForestSpec& spec, BuildOptions options) {
  spec.validate();
  const auto m = static_cast<std::size_t>(spec.m);
  const auto n = spec.n;
  const auto k = spec.k;
  const IntVec zero(m, 0);
  const auto budgets = budget_vectors(spec.m, k, true);

  GraphBuilder b{spec, {}, {}};
  b.graph.pruned = options.prune;
  b.graph.budgets = budgets;
  IntVec scratch(m);
  IntVec fires(m);

  if (options.prune) {
    b.layers.emplace_back(m, 1);
    for (int t = 1; t <= n; ++t) {
      b.layers.emplace_back(m, k * (n - t));
    }
    b.graph.start = b.add_node(0, IntVec(m, 1));
    for (int t = 1; t <= n; ++t) {
      for (const auto& f : budget_vectors(spec.m, k * (n - t), false)) {
        b.add_node(t, f);
      }
    }
    const auto node_count = b.graph.nodes.size();
    for (std::size_t id = 0; id < node_count; ++id) {
      const int t = b.graph.nodes[id].t;
      if (t == n) {
        continue;
      }
      const auto& d = spec.d[static_cast<std::size_t>(t)];
      for (std::size_t j = 0; j < m; ++j) {
        fires[j] = d[j] * b.graph.nodes[id].f[j];
      }
      if (l1_norm(fires) <= k) {
        b.graph.edges.push_back({id, *b.layers[static_cast<std::size_t>(t + 1)].get(zero), {}});
        continue;
      }
      // Every budget vector spends exactly k, so ||g|| = ||fires|| - k
      // whenever g is non-negative.
      if (l1_norm(fires) - k > k * (n - t - 1)) {
        continue;
      }
      for (std::size_t q = 0; q < budgets.size(); ++q) {
        if (!cwise_leq(budgets[q], fires)) {
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
          scratch[j] = fires[j] - budgets[q][j];
        }
        const auto to = b.layers[static_cast<std::size_t>(t + 1)].get(scratch);
        b.graph.edges.push_back({id, *to, q});
      }
    }
  } else {
    // Every state reachable from the start; fire counts bounded only by the
    // degree products.
    IntVec reach(m, 1);
    b.layers.emplace_back(m, 1);
    for (int t = 1; t <= n; ++t) {
      reach = hadamard(reach, spec.d[static_cast<std::size_t>(t - 1)]);
      b.layers.emplace_back(m, max_component(reach));
    }
    b.graph.start = b.add_node(0, IntVec(m, 1));
    for (std::size_t id = 0; id < b.graph.nodes.size(); ++id) {
      const int t = b.graph.nodes[id].t;
      if (t == n) {
        continue;
      }
      const auto& d = spec.d[static_cast<std::size_t>(t)];
      for (std::size_t j = 0; j < m; ++j) {
        fires[j] = d[j] * b.graph.nodes[id].f[j];
      }
      if (l1_norm(fires) <= k) {
        const auto to = b.add_node(t + 1, zero);
        b.graph.edges.push_back({id, to, {}});
        continue;
      }
      for (std::size_t q = 0; q < budgets.size(); ++q) {
        if (!cwise_leq(budgets[q], fires)) {
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
          scratch[j] = fires[j] - budgets[q][j];
        }
        const auto to = b.add_node(t + 1, scratch);
        b.graph.edges.push_back({id, to, q});
      }
    }
  }
  b.graph.goal = b.layers[static_cast<std::size_t>(n)].get(zero);
  return std::move(b.graph);
}

Savability leaves_savable(const ForestSpec& spec, BuildOptions options) {
  spec.validate();
  Savability result;
  if (options.prune && static_cast<Count>(spec.m) > static_cast<Count>(spec.n) * spec.k) {
    result.early_reject = true;
    return result;
  }
  const auto graph = build_state_graph(spec, options);
  result.states = graph.nodes.size();
  result.edges = graph.edges.size();
  if (!graph.goal) {
    return result;
  }

  // Outgoing edges grouped by source, in insertion order.
  std::vector<std::size_t> offsets(graph.nodes.size() + 1, 0);
  for (const auto& e : graph.edges) {
    ++offsets[e.from + 1];
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    offsets[i] += offsets[i - 1];
  }
  std::vector<std::size_t> order(graph.edges.size());
  {
    auto fill = offsets;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      order[fill[graph.edges[e].from]++] = e;
    }
  }

  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(graph.nodes.size(), kUnseen);
  std::vector<bool> seen(graph.nodes.size(), false);
  std::deque<std::size_t> queue{graph.start};
  seen[graph.start] = true;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto e = offsets[u]; e < offsets[u + 1]; ++e) {
      const auto& edge = graph.edges[order[e]];
      if (!seen[edge.to]) {
        seen[edge.to] = true;
        via[edge.to] = order[e];
        queue.push_back(edge.to);
      }
    }
  }
  if (!seen[*graph.goal]) {
    return result;
  }
  result.savable = true;

  // For an edge without a recorded budget, cover exactly the fires there.
  StrategySequence witness(static_cast<std::size_t>(spec.n));
  for (auto v = *graph.goal; v != graph.start;) {
    const auto& edge = graph.edges[via[v]];
    const auto& from = graph.nodes[edge.from];
    witness[static_cast<std::size_t>(from.t)] =
        edge.budget ? graph.budgets[*edge.budget] : hadamard(spec.d[static_cast<std::size_t>(from.t)], from.f);
    v = edge.from;
  }
  result.witness = std::move(witness);
  return result;
}

// ---------------------------------------------------------------------------

bool brute_force_hot_oracle(const ForestSpec& spec) {
  spec.validate();
  if (spec.m * spec.n > 12) {
    throw std::length_error("brute_force_hot_oracle: instance too large (m n > 12)");
  }
  const auto m = static_cast<std::size_t>(spec.m);
  const auto n = static_cast<std::size_t>(spec.n);
  const IntVec zero(m, 0);
  const auto choices = budget_vectors(spec.m, spec.k, false);

  // Failed (t, f) pairs. Fire counts never exceed the degree products, so
  // f packs into one integer per depth when the products are small enough.
  IntVec reach(m, 1);
  for (const auto& row : spec.d) {
    reach = hadamard(reach, row);
  }
  const RadixKey pack(m, *std::max_element(reach.begin(), reach.end()));
  std::vector<std::unordered_set<std::uint64_t>> failed_packed(n);
  std::vector<std::set<IntVec>> failed_wide(n);
  auto failed_before = [&](std::size_t t, const IntVec& f) {
    return pack.fits() ? failed_packed[t].contains(*pack(f)) : failed_wide[t].contains(f);
  };
  auto mark_failed = [&](std::size_t t, const IntVec& f) {
    if (pack.fits()) {
      failed_packed[t].insert(*pack(f));
    } else {
      failed_wide[t].insert(f);
    }
  };

  StrategySequence chosen(n);
  std::vector<IntVec> fires(n, IntVec(m));
  std::vector<IntVec> next(n, IntVec(m));

  // Budget vectors with p_j > x_j for some j lead to the same next state as
  // their clipped version, which is enumerated anyway, so they are skipped.
  auto search = [&](auto& self, std::size_t t, const IntVec& f) -> bool {
    if (t == n) {
      return f == zero;
    }
    if (failed_before(t, f)) {
      return false;
    }
    auto& x = fires[t];
    const auto& d = spec.d[t];
    for (std::size_t j = 0; j < m; ++j) {
      x[j] = f[j] * d[j];
    }
    auto& g = next[t];
    for (const auto& p : choices) {
      bool clipped = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (p[j] > x[j]) {
          clipped = true;
          break;
        }
        g[j] = x[j] - p[j];
      }
      if (clipped) {
        continue;
      }
      if (self(self, t + 1, g)) {
        chosen[t] = p;
        return true;
      }
    }
    mark_failed(t, f);
    return false;
  };

  if (!search(search, 0, IntVec(m, 1))) {
    return false;
  }
  if (forest_fire_counts(spec, chosen).back() != zero) {
    throw std::logic_error("brute_force_hot_oracle: found sequence does not save the leaves");
  }
  return true;
}

// ---------------------------------------------------------------------------

ExplicitForest ExplicitForest::expand(const ForestSpec& spec) {
  spec.validate();
  if (spec.vertex_count() > (std::size_t{1} << 20)) {
    throw std::length_error("ExplicitForest::expand: forest too large");
  }
  ExplicitForest out;
  out.height = spec.n;
  for (int j = 0; j < spec.m; ++j) {
    std::vector<int> level{static_cast<int>(out.parent.size())};
    out.parent.push_back(-1);
    out.depth.push_back(0);
    for (int i = 0; i < spec.n; ++i) {
      const auto d = spec.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      std::vector<int> next;
      for (int v : level) {
        for (Count c = 0; c < d; ++c) {
          next.push_back(static_cast<int>(out.parent.size()));
          out.parent.push_back(v);
          out.depth.push_back(i + 1);
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

bool game_tree_oracle(const ExplicitForest& forest, Count k) {
  using Mask = std::uint64_t;
  constexpr std::size_t kMaxVertices = 40;
  constexpr std::size_t kMaxStates = 2'000'000;
  const auto size = forest.size();
  if (size > kMaxVertices) {
    throw std::length_error("game_tree_oracle: more than 40 vertices");
  }
  if (k < 0) {
    throw std::invalid_argument("game_tree_oracle: negative k");
  }

  std::vector<Mask> children(size, 0);
  std::vector<Mask> lineage(size, 0);  // the vertex and all its ancestors
  Mask roots = 0;
  Mask leaves = 0;
  for (std::size_t v = 0; v < size; ++v) {
    const Mask bit = Mask{1} << v;
    if (forest.parent[v] < 0) {
      roots |= bit;
      lineage[v] = bit;
    } else {
      const auto p = static_cast<std::size_t>(forest.parent[v]);
      if (p >= v) {
        throw std::invalid_argument("game_tree_oracle: parents must precede children");
      }
      children[p] |= bit;
      lineage[v] = lineage[p] | bit;
    }
    if (forest.depth[v] == forest.height) {
      leaves |= bit;
    }
  }
  auto reach = [&](Mask burning) {
    Mask out = 0;
    for (Mask b = burning; b != 0; b &= b - 1) {
      out |= children[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return out;
  };

  std::vector<std::size_t> by_depth(size);
  for (std::size_t v = 0; v < size; ++v) {
    by_depth[v] = v;
  }
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](std::size_t a, std::size_t b) { return forest.depth[a] < forest.depth[b]; });

  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
      return std::hash<Mask>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
  };
  std::unordered_set<std::pair<Mask, Mask>, PairHash> failed;

  std::function<bool(Mask, Mask)> solve = [&](Mask burning, Mask guarded) -> bool {
    if ((burning & leaves) != 0) {
      return false;
    }
    if ((reach(burning) & ~burning & ~guarded) == 0) {
      return true;
    }
    if (failed.contains({burning, guarded})) {
      return false;
    }
    if (failed.size() > kMaxStates) {
      throw std::length_error("game_tree_oracle: search budget exhausted");
    }
    // Unburned vertices with no protected ancestor; anything else can never
    // burn and protecting it changes nothing.
    std::vector<std::size_t> open;
    for (auto v : by_depth) {
      if (((burning | guarded) >> v & 1U) == 0 && (lineage[v] & guarded) == 0) {
        open.push_back(v);
      }
    }
    const auto pick = static_cast<std::size_t>(std::min<Count>(k, static_cast<Count>(open.size())));
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) {
      idx[i] = i;
    }
    while (true) {
      Mask chosen = 0;
      for (auto i : idx) {
        chosen |= Mask{1} << open[i];
      }
      const Mask next_guarded = guarded | chosen;
      const Mask next_burning = burning | (reach(burning) & ~next_guarded);
      if (solve(next_burning, next_guarded)) {
        return true;
      }
      // Next combination of `pick` indices out of open.size().
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == open.size() - pick + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (auto j = i; j < pick; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
    failed.insert({burning, guarded});
    return false;
  };

  return solve(roots, 0);
}

}  // namespace firefighter::forest
