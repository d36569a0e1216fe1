#pragma once

// Static pictures of a hex-grid fire state: SVG in the usual planar
// embedding (x = i sqrt(3)/2, y = j/2) and a coarse ASCII view.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "firefighter/fire_engine.hpp"
#include "firefighter/hexgrid.hpp"

namespace firefighter::render {

using hex::HexVertex;

enum class Format { Svg, Ascii };

// Throws std::invalid_argument for anything but "svg" or "ascii".
Format parse_format(std::string_view text);
const char* to_string(Format format);

struct RenderWindow {
  std::int64_t i_min = 0;
  std::int64_t i_max = 0;
  std::int64_t j_min = 0;
  std::int64_t j_max = 0;
  Format format = Format::Svg;

  // Throws std::invalid_argument unless i_min <= i_max and j_min <= j_max.
  void validate() const;
  bool contains(const HexVertex& v) const {
    return v.i >= i_min && v.i <= i_max && v.j >= j_min && v.j <= j_max;
  }

  // "i_min:i_max:j_min:j_max", e.g. "-80:10:-40:40".
  static RenderWindow parse(std::string_view text, Format format = Format::Svg);
};

// Vertices drawn with a ring around them.
struct Markers {
  std::optional<HexVertex> fire_origin;
  std::optional<HexVertex> center;
};

using HexState = SimState<InfiniteHexGrid>;

// Burning red, protected black, everything else gray.
std::string render_svg(const HexState& state, const RenderWindow& window, const Markers& markers,
                       double scale = 12.0);

// '*' burning, '#' protected, '.' untouched vertex; 'f' and 'c' mark the
// markers when they are neither burning nor protected. Two columns per i.
std::string render_ascii(const HexState& state, const RenderWindow& window, const Markers& markers);

std::string render_frame(const HexState& state, const RenderWindow& window, const Markers& markers,
                         double scale = 12.0);

}  // namespace firefighter::render
