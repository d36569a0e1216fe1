#include "firefighter/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace firefighter::render {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "svg") {
    return Format::Svg;
  }
  if (text == "ascii") {
    return Format::Ascii;
  }
  throw std::invalid_argument("unknown render format '" + std::string(text) + "'");
}

const char* to_string(Format format) { return format == Format::Svg ? "svg" : "ascii"; }

void RenderWindow::validate() const {
  if (i_min > i_max || j_min > j_max) {
    throw std::invalid_argument("render window: empty range");
  }
}

RenderWindow RenderWindow::parse(std::string_view text, Format format) {
  std::int64_t values[4];
  std::size_t pos = 0;
  for (int n = 0; n < 4; ++n) {
    const auto end = n < 3 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) {
      throw std::invalid_argument("render window: expected i_min:i_max:j_min:j_max");
    }
    const auto part = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), values[n]);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("render window: bad number '" + std::string(part) + "'");
    }
    pos = end + 1;
  }
  RenderWindow w{values[0], values[1], values[2], values[3], format};
  w.validate();
  return w;
}

std::string render_svg(const HexState& state, const RenderWindow& window, const Markers& markers,
                       double scale) {
  window.validate();
  if (!(scale > 0)) {
    throw std::invalid_argument("render_svg: scale must be positive");
  }
  const double margin = scale;
  const double half_root3 = std::sqrt(3.0) / 2.0;
  auto x_of = [&](const HexVertex& v) {
    return margin + static_cast<double>(v.i - window.i_min) * half_root3 * scale;
  };
  auto y_of = [&](const HexVertex& v) {
    return margin + static_cast<double>(window.j_max - v.j) / 2.0 * scale;
  };
  const double width = 2 * margin + static_cast<double>(window.i_max - window.i_min) * half_root3 * scale;
  const double height = 2 * margin + static_cast<double>(window.j_max - window.j_min) / 2.0 * scale;

  std::vector<HexVertex> inside;
  for (auto i = window.i_min; i <= window.i_max; ++i) {
    for (auto j = window.j_min; j <= window.j_max; ++j) {
      if (hex::is_vertex(i, j)) {
        inside.push_back({i, j});
      }
    }
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"4\" y=\"12\" font-size=\"10\" font-family=\"monospace\">turn " +
         std::to_string(state.turn) + "</text>\n";
  out += "<g stroke=\"#cccccc\" stroke-width=\"" + fmt(scale * 0.06) + "\">\n";
  for (const auto& v : inside) {
    if (!hex::is_upward(v)) {
      continue;  // each edge has exactly one upward endpoint
    }
    for (const auto& w : hex::neighbors(v)) {
      if (window.contains(w)) {
        out += "<line x1=\"" + fmt(x_of(v)) + "\" y1=\"" + fmt(y_of(v)) + "\" x2=\"" + fmt(x_of(w)) +
               "\" y2=\"" + fmt(y_of(w)) + "\"/>\n";
      }
    }
  }
  out += "</g>\n";
  const double r = scale * 0.2;
  for (const auto& v : inside) {
    const char* colour = "#999999";
    if (state.burning.contains(v)) {
      colour = "red";
    } else if (state.protected_set.contains(v)) {
      colour = "black";
    }
    out += "<circle cx=\"" + fmt(x_of(v)) + "\" cy=\"" + fmt(y_of(v)) + "\" r=\"" + fmt(r) +
           "\" fill=\"" + colour + "\"/>\n";
  }
  for (const auto& mark : {markers.fire_origin, markers.center}) {
    if (mark && window.contains(*mark)) {
      out += "<circle cx=\"" + fmt(x_of(*mark)) + "\" cy=\"" + fmt(y_of(*mark)) + "\" r=\"" +
             fmt(scale * 0.45) + "\" fill=\"none\" stroke=\"blue\" stroke-width=\"" +
             fmt(scale * 0.08) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const HexState& state, const RenderWindow& window, const Markers& markers) {
  window.validate();
  std::string out = "turn " + std::to_string(state.turn) + "\n";
  for (auto j = window.j_max; j >= window.j_min; --j) {
    std::string row;
    for (auto i = window.i_min; i <= window.i_max; ++i) {
      char c = ' ';
      if (hex::is_vertex(i, j)) {
        const HexVertex v{i, j};
        if (state.burning.contains(v)) {
          c = '*';
        } else if (state.protected_set.contains(v)) {
          c = '#';
        } else if (markers.fire_origin == v) {
          c = 'f';
        } else if (markers.center == v) {
          c = 'c';
        } else {
          c = '.';
        }
      }
      row += c;
      row += ' ';
    }
    while (!row.empty() && row.back() == ' ') {
      row.pop_back();
    }
    if (row.empty()) {
      continue;  // no vertices on this row
    }
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_frame(const HexState& state, const RenderWindow& window, const Markers& markers,
                         double scale) {
  return window.format == Format::Svg ? render_svg(state, window, markers, scale)
                                      : render_ascii(state, window, markers);
}

}  // namespace firefighter::render
