#include "rubikred/coloring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "rubikred/errors.hpp"

namespace rubikred {

std::size_t PredictedColoring::covered_count() const {
  return static_cast<std::size_t>(
      std::count_if(colors.begin(), colors.end(), [](const auto& c) { return c.has_value(); }));
}

PredictedColoring from_config(const PuzzleConfig& config) {
  PredictedColoring out{config.puzzle().kind(), config.puzzle().side(), {}};
  out.colors.assign(config.colors().begin(), config.colors().end());
  return out;
}

bool agrees_with(const PredictedColoring& predicted, const PuzzleConfig& config) {
  if (predicted.puzzle() != config.puzzle()) return false;
  const auto colors = config.colors();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (predicted.colors[i] && *predicted.colors[i] != colors[i]) return false;
  }
  return true;
}

namespace {

// Bit j of l_i, with bits outside 1..m reading as absent (false).
bool bit_one(const CubicalInstance& inst, int i, int j) {
  if (j < 1 || j > static_cast<int>(inst.m())) return false;
  return inst.bit(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

// i in 1..n when z = m + i, else 0.
int band(const CubicalInstance& inst, int z) {
  const int i = z - static_cast<int>(inst.m());
  return (i >= 1 && i <= static_cast<int>(inst.n())) ? i : 0;
}

}  // namespace

PredictedColoring predict_square_cb(const CubicalInstance& inst) {
  require_valid_instance(inst);
  const int side = reduction_side(Kind::Square, inst.n(), inst.m());
  const Puzzle puzzle(Kind::Square, side);
  PredictedColoring out{Kind::Square, side, std::vector<std::optional<Color>>(puzzle.sticker_count())};
  const int n = static_cast<int>(inst.n());
  const int m = static_cast<int>(inst.m());
  for (int c : puzzle.coords()) {
    for (int r : puzzle.coords()) {
      const bool blue =
          r >= 1 && r <= n && (std::abs(c) > m || !bit_one(inst, r, std::abs(c)));
      out.colors[puzzle.id({Face::PosZ, c, r})] = blue ? Color::B : Color::R;
      out.colors[puzzle.id({Face::NegZ, c, r})] = blue ? Color::R : Color::B;
    }
  }
  return out;
}

PredictedColoring predict_cube_cb(const CubicalInstance& inst) {
  require_valid_instance(inst);
  const int side = reduction_side(Kind::Cube, inst.n(), inst.m());
  const Puzzle puzzle(Kind::Cube, side);
  PredictedColoring out{Kind::Cube, side, std::vector<std::optional<Color>>(puzzle.sticker_count())};
  for (std::uint32_t id = 0; id < puzzle.sticker_count(); ++id) {
    const StickerPos p = puzzle.pos(id);
    Color color = Color::W;
    switch (p.face) {
      case Face::PosZ:
      case Face::NegZ: {
        // (u, v) = (x, y); marked cells sit at y = -(m+i).
        const int i = band(inst, -p.v);
        const bool marked = i != 0 && bit_one(inst, i, p.u);
        if (p.face == Face::PosZ) color = marked ? Color::R : Color::W;
        else color = marked ? Color::O : Color::B;
        break;
      }
      case Face::PosY:
      case Face::NegY: {
        const int i = band(inst, p.v);
        const bool marked = i != 0 && !bit_one(inst, i, p.u);
        if (p.face == Face::PosY) color = marked ? Color::R : Color::G;
        else color = marked ? Color::O : Color::Y;
        break;
      }
      case Face::PosX:
      case Face::NegX: {
        const int i = band(inst, p.v);
        const bool pos = p.face == Face::PosX;
        if (i == 0) color = pos ? Color::O : Color::R;
        else if (bit_one(inst, i, -p.u)) color = pos ? Color::W : Color::B;
        else color = pos ? Color::G : Color::Y;
        break;
      }
    }
    out.colors[id] = color;
  }
  return out;
}

PredictedColoring predict_ct(const CubicalInstance& inst, Kind kind) {
  const PredictedColoring cb = kind == Kind::Square ? predict_square_cb(inst) : predict_cube_cb(inst);
  const StickerPermutation a1 = build_a(inst, 1, kind);
  PredictedColoring out{cb.kind, cb.side, std::vector<std::optional<Color>>(cb.colors.size())};
  for (std::uint32_t i = 0; i < cb.colors.size(); ++i) out.colors[a1(i)] = cb.colors[i];
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

RenderFormat render_format_from_string(std::string_view text) {
  if (text == "ascii") return RenderFormat::Ascii;
  if (text == "svg") return RenderFormat::Svg;
  throw InvalidArgument("unknown render format '" + std::string(text) + "'");
}

namespace {

constexpr int kCell = 20;

struct Placed {
  Face face;
  std::size_t row;  // top-left, in sticker cells
  std::size_t col;
};

std::vector<Placed> layout(const Puzzle& puzzle, std::optional<Face> face) {
  if (face) return {{*face, 0, 0}};
  constexpr std::array<Face, 4> strip = {Face::PosX, Face::PosY, Face::NegX, Face::NegY};
  std::vector<Placed> out;
  const std::size_t top_rows = puzzle.face_rows(Face::PosZ);
  const std::size_t top_col = puzzle.face_cols(Face::PosX) + 1;
  out.push_back({Face::PosZ, 0, top_col});
  std::size_t col = 0;
  std::size_t strip_rows = 0;
  for (Face f : strip) {
    out.push_back({f, top_rows + 1, col});
    col += puzzle.face_cols(f) + 1;
    strip_rows = std::max(strip_rows, puzzle.face_rows(f));
  }
  out.push_back({Face::NegZ, top_rows + strip_rows + 2, top_col});
  return out;
}

const char* svg_fill(const std::optional<Color>& c) {
  if (!c) return "#808080";
  switch (*c) {
    case Color::R:
      return "#c41e3a";
    case Color::B:
      return "#0051ba";
    case Color::G:
      return "#009e60";
    case Color::W:
      return "#ffffff";
    case Color::Y:
      return "#ffd500";
    case Color::O:
      return "#ff5800";
  }
  return "#808080";
}

}  // namespace

std::string render(const Puzzle& puzzle, std::span<const std::optional<Color>> colors,
                   RenderFormat format, std::optional<Face> face) {
  if (colors.size() != puzzle.sticker_count()) throw InvalidArgument("colour count mismatch");
  const std::vector<Placed> placed = layout(puzzle, face);
  std::size_t height = 0;
  std::size_t width = 0;
  for (const Placed& p : placed) {
    height = std::max(height, p.row + puzzle.face_rows(p.face));
    width = std::max(width, p.col + puzzle.face_cols(p.face));
  }

  if (format == RenderFormat::Ascii) {
    std::vector<std::string> grid(height, std::string(width, ' '));
    for (const Placed& p : placed) {
      const std::size_t rows = puzzle.face_rows(p.face);
      const std::size_t cols = puzzle.face_cols(p.face);
      const std::size_t offset = puzzle.face_offset(p.face);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const auto& color = colors[offset + r * cols + c];
          grid[p.row + r][p.col + c] = color ? to_char(*color) : '.';
        }
      }
    }
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      std::string line = grid[r];
      line.erase(line.find_last_not_of(' ') + 1);
      out += line;
      if (r + 1 < grid.size()) out += '\n';
    }
    return out;
  }

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width * kCell << R"(" height=")"
      << height * kCell << R"(">)" << '\n';
  for (const Placed& p : placed) {
    const std::size_t rows = puzzle.face_rows(p.face);
    const std::size_t cols = puzzle.face_cols(p.face);
    const std::size_t offset = puzzle.face_offset(p.face);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        svg << R"(<rect x=")" << (p.col + c) * kCell << R"(" y=")" << (p.row + r) * kCell
            << R"(" width=")" << kCell << R"(" height=")" << kCell << R"(" fill=")"
            << svg_fill(colors[offset + r * cols + c]) << R"(" stroke="#000000"/>)" << '\n';
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render(const PuzzleConfig& config, RenderFormat format, std::optional<Face> face) {
  const std::vector<std::optional<Color>> colors(config.colors().begin(), config.colors().end());
  return render(config.puzzle(), colors, format, face);
}

std::string render(const PredictedColoring& coloring, RenderFormat format,
                   std::optional<Face> face) {
  return render(coloring.puzzle(), coloring.colors, format, face);
}

}  // namespace rubikred
