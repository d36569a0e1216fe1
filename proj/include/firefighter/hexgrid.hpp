#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace firefighter::hex {

// A vertex of the hexagonal grid in integer coordinates. The point (i, j)
// sits at (i * sqrt(3) / 2, j / 2) in the plane, so every edge has length 1.
struct HexVertex {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend constexpr auto operator<=>(const HexVertex&, const HexVertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const HexVertex& v);

struct HexVertexHash {
  std::size_t operator()(const HexVertex& v) const noexcept {
    auto h = static_cast<std::uint64_t>(v.i) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(v.j) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline constexpr HexVertex kOrigin{0, 0};

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// (i mod 2, j mod 6) in {(0,0), (0,2), (1,3), (1,5)}.
constexpr bool is_vertex(std::int64_t i, std::int64_t j) {
  const auto ri = floor_mod(i, 2);
  const auto rj = floor_mod(j, 6);
  return (ri == 0 && (rj == 0 || rj == 2)) || (ri == 1 && (rj == 3 || rj == 5));
}

constexpr bool is_vertex(const HexVertex& v) { return is_vertex(v.i, v.j); }

// Class A vertices ((0,0) and (1,3) residues) have their vertical edge going
// up; class B vertices ((0,2) and (1,5)) have it going down.
bool is_upward(const HexVertex& v);

// Throws std::invalid_argument for non-vertices.
std::array<HexVertex, 3> neighbors(const HexVertex& v);

bool adjacent(const HexVertex& u, const HexVertex& v);

// Graph distance from the origin via the closed-form characterization
// max{|2j - p| / 3, |i| + |j + p| / 3} = d with p = d mod 2.
// Throws std::invalid_argument if no d satisfies it.
std::int64_t dist_from_origin(const HexVertex& v);

// Graph distance between two vertices. Class A centers are handled by
// translation; class B centers by reflecting through the line y = 1/2 first.
std::int64_t dist_from(const HexVertex& center, const HexVertex& v);

struct DistanceShell {
  HexVertex center;
  std::int64_t radius = 0;
  std::vector<HexVertex> members;  // sorted
};

// Vertices at exactly distance d from center, computed by breadth-first
// layering over neighbors(). Independent of the closed-form distance.
DistanceShell shell(const HexVertex& center, std::int64_t d);

// All BFS layers 0..radius around center.
std::vector<DistanceShell> shells_up_to(const HexVertex& center, std::int64_t radius);

constexpr std::int64_t shell_size(std::int64_t d) { return d == 0 ? 1 : 3 * d; }
constexpr std::int64_t ball_size(std::int64_t d) { return 1 + 3 * d * (d + 1) / 2; }

}  // namespace firefighter::hex

template <>
struct std::hash<firefighter::hex::HexVertex> : firefighter::hex::HexVertexHash {};
