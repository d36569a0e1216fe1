#include "firefighter/hexgrid.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace firefighter::hex {

std::ostream& operator<<(std::ostream& os, const HexVertex& v) {
  return os << '(' << v.i << ',' << v.j << ')';
}

namespace {

void require_vertex(const HexVertex& v, const char* what) {
  if (!is_vertex(v)) {
    std::ostringstream msg;
    msg << what << ": " << v << " is not a hexagonal grid vertex";
    throw std::invalid_argument(msg.str());
  }
}

// Reflection through the horizontal line y = 1/2. It swaps the two vertex
// classes and preserves adjacency.
HexVertex reflect(const HexVertex& v) { return {v.i, 2 - v.j}; }

}  // namespace

bool is_upward(const HexVertex& v) {
  require_vertex(v, "is_upward");
  const auto rj = floor_mod(v.j, 6);
  return rj == 0 || rj == 3;
}

std::array<HexVertex, 3> neighbors(const HexVertex& v) {
  if (is_upward(v)) {
    return {HexVertex{v.i, v.j + 2}, HexVertex{v.i + 1, v.j - 1}, HexVertex{v.i - 1, v.j - 1}};
  }
  return {HexVertex{v.i, v.j - 2}, HexVertex{v.i + 1, v.j + 1}, HexVertex{v.i - 1, v.j + 1}};
}

bool adjacent(const HexVertex& u, const HexVertex& v) {
  const auto ns = neighbors(u);
  return std::find(ns.begin(), ns.end(), v) != ns.end();
}

std::int64_t dist_from_origin(const HexVertex& v) {
  require_vertex(v, "dist_from_origin");
  std::optional<std::int64_t> found;
  for (std::int64_t parity = 0; parity < 2; ++parity) {
    // Scaled by 3 so the test stays in integers.
    const auto a = std::abs(2 * v.j - parity);
    const auto b = 3 * std::abs(v.i) + std::abs(v.j + parity);
    const auto m = std::max(a, b);
    if (m % 3 != 0 || (m / 3) % 2 != parity) {
      continue;
    }
    if (found && *found != m / 3) {
      std::ostringstream msg;
      msg << "dist_from_origin: both parities consistent at " << v;
      throw std::logic_error(msg.str());
    }
    found = m / 3;
  }
  if (!found) {
    std::ostringstream msg;
    msg << "dist_from_origin: no distance satisfies the closed form at " << v;
    throw std::invalid_argument(msg.str());
  }
  return *found;
}

std::int64_t dist_from(const HexVertex& center, const HexVertex& v) {
  require_vertex(center, "dist_from");
  require_vertex(v, "dist_from");
  if (is_upward(center)) {
    return dist_from_origin({v.i - center.i, v.j - center.j});
  }
  const auto c = reflect(center);
  const auto w = reflect(v);
  return dist_from_origin({w.i - c.i, w.j - c.j});
}

std::vector<DistanceShell> shells_up_to(const HexVertex& center, std::int64_t radius) {
  require_vertex(center, "shell");
  if (radius < 0) {
    throw std::invalid_argument("shell: negative radius");
  }
  std::vector<DistanceShell> layers;
  layers.reserve(static_cast<std::size_t>(radius) + 1);
  std::unordered_set<HexVertex, HexVertexHash> seen{center};
  std::vector<HexVertex> frontier{center};
  for (std::int64_t d = 0;; ++d) {
    DistanceShell layer{center, d, frontier};
    std::sort(layer.members.begin(), layer.members.end());
    layers.push_back(std::move(layer));
    if (d == radius) {
      break;
    }
    std::vector<HexVertex> next;
    for (const auto& u : frontier) {
      for (const auto& w : neighbors(u)) {
        if (seen.insert(w).second) {
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return layers;
}

DistanceShell shell(const HexVertex& center, std::int64_t d) {
  auto layers = shells_up_to(center, d);
  return std::move(layers.back());
}

}  // namespace firefighter::hex
