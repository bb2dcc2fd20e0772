#pragma once

// Closed-form colourings of C_b and C_t, and text/SVG renderers.

#include <optional>
#include <string>
#include <vector>

#include "rubikred/reduction.hpp"

namespace rubikred {

// Colour per canonical sticker id; nullopt marks stickers the predictor
// says nothing about (the Square side faces).
struct PredictedColoring {
  Kind kind = Kind::Square;
  int side = 0;
  std::vector<std::optional<Color>> colors;

  Puzzle puzzle() const { return Puzzle(kind, side); }
  bool covers(std::uint32_t id) const { return colors.at(id).has_value(); }
  std::size_t covered_count() const;

  friend bool operator==(const PredictedColoring&, const PredictedColoring&) = default;
};

PredictedColoring from_config(const PuzzleConfig& config);

// True when every covered sticker agrees with `config`.
bool agrees_with(const PredictedColoring& predicted, const PuzzleConfig& config);

// Top sticker at (c, r) is blue iff 1 <= r <= n and (|c| > m or bit |c| of
// l_r is 0), red otherwise; the bottom face shows the opposite colour.
PredictedColoring predict_square_cb(const CubicalInstance& inst);
// All six faces of C_b for the Cube reduction (side 6n + 2m).
PredictedColoring predict_cube_cb(const CubicalInstance& inst);
// a_1 applied to the predicted C_b.
PredictedColoring predict_ct(const CubicalInstance& inst, Kind kind);

enum class RenderFormat : std::uint8_t { Ascii, Svg };
RenderFormat render_format_from_string(std::string_view text);

// ASCII: one character per sticker (colour letter, '.' when unknown), rows
// follow the first in-face coordinate u and columns the second v, both
// ascending. With no face given the six faces form a net: +z on top, then
// the strip +x +y -x -y, then -z.
// SVG: one 20x20 rect per sticker in the same arrangement.
std::string render(const Puzzle& puzzle, std::span<const std::optional<Color>> colors,
                   RenderFormat format, std::optional<Face> face = std::nullopt);
std::string render(const PuzzleConfig& config, RenderFormat format,
                   std::optional<Face> face = std::nullopt);
std::string render(const PredictedColoring& coloring, RenderFormat format,
                   std::optional<Face> face = std::nullopt);

}  // namespace rubikred
