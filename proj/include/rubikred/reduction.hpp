#pragma once

// Builds the transformations a_i, b_i and t from a cubical instance and emits
// (t, k) / (C_t, k) instances for the Square and the Cube.
//
// Move words are stored in application order (first element acts first), so
// a product written p o q as functions becomes the word q followed by p.

#include <optional>

#include "rubikred/hampath.hpp"
#include "rubikred/puzzle.hpp"

namespace rubikred {

enum class ProblemKind : std::uint8_t { Square, CubeStm, CubeSqtm };

Kind puzzle_kind(ProblemKind kind);
Metric problem_metric(ProblemKind kind);
std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view text);

// Square: 2(max(m, n) + 2n). Cube: 6n + 2m.
int reduction_side(Kind kind, std::size_t n, std::size_t m);
// 2n - 1.
int reduction_budget(std::size_t n);

struct ReducedInstance {
  ProblemKind kind = ProblemKind::Square;
  bool group = false;
  int side = 0;
  int budget = 0;
  // Present for the group variant.
  std::optional<StickerPermutation> transformation;
  // Present for the non-group variant: t(C_0).
  std::optional<PuzzleConfig> configuration;
  CubicalInstance source;
  // Word defining t; in-memory provenance only, not serialised.
  MoveSequence defining_word;

  Puzzle puzzle() const { return Puzzle(puzzle_kind(kind), side); }
  Metric metric() const { return problem_metric(kind); }
};

// Words (application order). Indices i are 1-based.
MoveSequence a_word(const CubicalInstance& inst, std::size_t i, Kind kind);
MoveSequence b_word(const CubicalInstance& inst, std::size_t i, Kind kind);
// b_n first, ..., b_1, then a_1.
MoveSequence t_word(const CubicalInstance& inst, Kind kind);
// Applies the b factors in the given order (1-based indices); any order of
// all n indices yields the same permutation.
MoveSequence t_word_with_order(const CubicalInstance& inst, Kind kind,
                               std::span<const std::size_t> b_order);

// Column flips x_j (Square) or clockwise x turns x_j (Cube) at every j with
// bit j of l_i set.
StickerPermutation build_a(const CubicalInstance& inst, std::size_t i, Kind kind);
// a_i^-1 o y_i o a_i (Square) or a_i^-1 o z_{m+i} o a_i (Cube, clockwise z).
StickerPermutation build_b(const CubicalInstance& inst, std::size_t i, Kind kind);
// a_1 o b_1 o ... o b_n.
StickerPermutation build_t(const CubicalInstance& inst, Kind kind);

ReducedInstance reduce(const CubicalInstance& inst, ProblemKind kind, bool group_variant);

}  // namespace rubikred
