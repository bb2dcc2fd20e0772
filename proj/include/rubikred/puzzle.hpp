#pragma once

// Sticker-level model of the n x n Rubik's Square and n x n x n Rubik's Cube.
//
// Coordinates follow the centred scheme: a side of length s = 2a uses
// {-a..-1, 1..a} (no zero), a side of length s = 2a+1 uses {-a..a}. A sticker
// is addressed by its face and two in-face coordinates:
//
//   +-x faces: (u, v) = (y, z)        Square +-x faces: u = y, v = 0
//   +-y faces: (u, v) = (x, z)        Square +-y faces: u = x, v = 0
//   +-z faces: (u, v) = (x, y)        Square +-z faces: (u, v) = (x, y)
//
// Canonical sticker ids enumerate faces in the order +x, -x, +y, -y, +z, -z,
// and within a face increase with u first and then v (row-major, rows = u).
// A Square therefore numbers its four s x 1 side faces first (ids 0..4s-1),
// then the top (+z) and bottom (-z) faces.
//
// Moves rotate a slice {cubie : cubie[axis] == index}. Clockwise/counter-
// clockwise are judged looking from the positive end of the axis; a clockwise
// x turn carries +z stickers to +y, a clockwise z turn carries +y stickers to
// +x. Square moves are 180 degree flips about the row (y) or column (x) axis.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rubikred {

enum class Kind : std::uint8_t { Square, Cube };
enum class Face : std::uint8_t { PosX, NegX, PosY, NegY, PosZ, NegZ };
enum class Color : std::uint8_t { R, B, G, W, Y, O };
enum class Axis : std::uint8_t { X, Y, Z };
enum class Rotation : std::uint8_t { Cw, Ccw, Half };
enum class Metric : std::uint8_t { SquareFlip, Stm, Sqtm };

inline constexpr std::array<Face, 6> kAllFaces = {Face::PosX, Face::NegX, Face::PosY,
                                                  Face::NegY, Face::PosZ, Face::NegZ};
inline constexpr std::size_t kColorCount = 6;

std::string_view to_string(Kind kind);
std::string_view to_string(Face face);
std::string_view to_string(Axis axis);
std::string_view to_string(Rotation rotation);
std::string_view to_string(Metric metric);
char to_char(Color color);

Kind kind_from_string(std::string_view text);
Face face_from_string(std::string_view text);
Color color_from_char(char c);

Axis normal_axis(Face face);
bool is_positive(Face face);

struct StickerPos {
  Face face;
  int u;
  int v;

  friend auto operator<=>(const StickerPos&, const StickerPos&) = default;
};

// A single move. Square flips carry no rotation amount.
//
// Moves are totally ordered by (axis, index, rotation) with x < y < z and
// cw < ccw < half; "lexicographically least" move sequences use this order.
struct Move {
  Axis axis = Axis::X;
  int index = 1;
  std::optional<Rotation> rotation;

  friend auto operator<=>(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

// Geometry of one puzzle: coordinate scheme and canonical sticker numbering.
class Puzzle {
 public:
  Puzzle(Kind kind, int side);

  Kind kind() const { return kind_; }
  int side() const { return side_; }
  // Largest coordinate value; the face slices sit at +-half().
  int half() const { return side_ / 2; }

  bool is_valid_coord(int c) const;
  // Position of c in the ascending coordinate list.
  std::size_t coord_index(int c) const;
  int coord_at(std::size_t index) const;
  std::vector<int> coords() const;

  std::size_t sticker_count() const;
  std::size_t face_rows(Face face) const;
  std::size_t face_cols(Face face) const;
  std::size_t face_offset(Face face) const;

  std::uint32_t id(const StickerPos& pos) const;
  StickerPos pos(std::uint32_t id) const;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;

 private:
  Kind kind_;
  int side_;
};

// Sparse action of one move: the sticker at `from` moves to `to`.
struct Transfer {
  std::uint32_t from;
  std::uint32_t to;
};

class MoveAction {
 public:
  MoveAction() = default;
  explicit MoveAction(std::vector<Transfer> transfers) : transfers_(std::move(transfers)) {}

  std::span<const Transfer> transfers() const { return transfers_; }

  // labels[to] <- labels[from] for every transfer; `scratch` avoids reallocation.
  template <typename T>
  void apply(std::span<T> labels, std::vector<T>& scratch) const {
    scratch.resize(transfers_.size());
    for (std::size_t k = 0; k < transfers_.size(); ++k) scratch[k] = labels[transfers_[k].from];
    for (std::size_t k = 0; k < transfers_.size(); ++k) labels[transfers_[k].to] = scratch[k];
  }

 private:
  std::vector<Transfer> transfers_;
};

// Bijection on the canonical sticker ids of one puzzle. map()[i] is the
// position the sticker at i is carried to.
class StickerPermutation {
 public:
  static StickerPermutation identity(const Puzzle& puzzle);

  // Throws InvalidArgument unless `map` is a bijection of the right size.
  StickerPermutation(const Puzzle& puzzle, std::vector<std::uint32_t> map);

  const Puzzle& puzzle() const { return puzzle_; }
  std::span<const std::uint32_t> map() const { return map_; }
  std::uint32_t operator()(std::uint32_t id) const { return map_[id]; }
  bool is_identity() const;
  // Ids the permutation does not fix, ascending.
  std::vector<std::uint32_t> support() const;

  friend bool operator==(const StickerPermutation&, const StickerPermutation&) = default;

 private:
  StickerPermutation(const Puzzle& puzzle, std::vector<std::uint32_t> map, bool /*trusted*/)
      : puzzle_(puzzle), map_(std::move(map)) {}

  friend StickerPermutation compose(const StickerPermutation&, const StickerPermutation&);
  friend StickerPermutation invert(const StickerPermutation&);
  friend StickerPermutation sequence_to_permutation(const Puzzle&, std::span<const Move>);

  Puzzle puzzle_;
  std::vector<std::uint32_t> map_;
};

// Colour of every sticker, indexed by canonical id.
class PuzzleConfig {
 public:
  PuzzleConfig(const Puzzle& puzzle, std::vector<Color> colors);

  const Puzzle& puzzle() const { return puzzle_; }
  std::span<const Color> colors() const { return colors_; }
  std::span<Color> colors() { return colors_; }
  Color at(const StickerPos& pos) const { return colors_[puzzle_.id(pos)]; }

  friend bool operator==(const PuzzleConfig&, const PuzzleConfig&) = default;

 private:
  Puzzle puzzle_;
  std::vector<Color> colors_;
};

// Solved colouring C_0. Cube: +x orange, -x red, +y green, -y yellow,
// +z white, -z blue. Square: top (+z) red, bottom (-z) blue, +x orange,
// -x white, +y green, -y yellow.
Color solved_color(Kind kind, Face face);
PuzzleConfig make_solved(Kind kind, int side);

bool metric_fits(Kind kind, Metric metric);
// Square: columns x then rows y, index ascending (2s moves).
// Cube: axis x, y, z; index ascending; rotation cw, ccw[, half].
std::vector<Move> enumerate_moves(Kind kind, int side, Metric metric);

// Well-formed for the puzzle (axis, index range, rotation presence).
bool is_valid_move(const Puzzle& puzzle, const Move& move);
// Well-formed and allowed by the metric (SQTM excludes half turns).
bool is_legal_move(const Puzzle& puzzle, const Move& move, Metric metric);
Move inverse_move(const Move& move);
bool same_slice(const Move& a, const Move& b);

MoveAction move_action(const Puzzle& puzzle, const Move& move);
StickerPermutation move_to_permutation(const Move& move, Kind kind, int side);

// (p o q)(i) = p(q(i)): q acts first.
StickerPermutation compose(const StickerPermutation& p, const StickerPermutation& q);
StickerPermutation invert(const StickerPermutation& p);
// Moves in application order; the first move acts first.
StickerPermutation sequence_to_permutation(const Puzzle& puzzle, std::span<const Move> moves);

// Colour at p(i) in the result is the colour at i in `config`.
PuzzleConfig apply_permutation(const StickerPermutation& p, const PuzzleConfig& config);
PuzzleConfig apply_sequence(std::span<const Move> moves, const PuzzleConfig& config);

// Every face monochromatic and the six face colours pairwise distinct.
bool is_solved(const PuzzleConfig& config);

Move parse_move(std::string_view token, Kind kind, int side);
std::string format_move(const Move& move);
MoveSequence parse_sequence(std::string_view text, Kind kind, int side);
std::string format_sequence(std::span<const Move> moves);

}  // namespace rubikred
