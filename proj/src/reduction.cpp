#include "rubikred/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "rubikred/errors.hpp"

namespace rubikred {

namespace {

void require_index(const CubicalInstance& inst, std::size_t i) {
  if (i < 1 || i > inst.n()) {
    throw InvalidArgument("label index " + std::to_string(i) + " outside 1.." +
                          std::to_string(inst.n()));
  }
}

Move column_move(Kind kind, int j, Rotation r) {
  if (kind == Kind::Square) return {Axis::X, j, std::nullopt};
  return {Axis::X, j, r};
}

// The b-word middle term: row flip y_i or clockwise z turn of slice m+i.
Move middle_move(const CubicalInstance& inst, std::size_t i, Kind kind) {
  if (kind == Kind::Square) return {Axis::Y, static_cast<int>(i), std::nullopt};
  return {Axis::Z, static_cast<int>(inst.m() + i), Rotation::Cw};
}

void append_b(MoveSequence& word, const CubicalInstance& inst, std::size_t i, Kind kind) {
  const MoveSequence a = a_word(inst, i, kind);
  word.insert(word.end(), a.begin(), a.end());
  word.push_back(middle_move(inst, i, kind));
  for (auto it = a.rbegin(); it != a.rend(); ++it) word.push_back(inverse_move(*it));
}

}  // namespace

Kind puzzle_kind(ProblemKind kind) { return kind == ProblemKind::Square ? Kind::Square : Kind::Cube; }

Metric problem_metric(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Square:
      return Metric::SquareFlip;
    case ProblemKind::CubeStm:
      return Metric::Stm;
    case ProblemKind::CubeSqtm:
      return Metric::Sqtm;
  }
  return Metric::SquareFlip;
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Square:
      return "square";
    case ProblemKind::CubeStm:
      return "cube_stm";
    case ProblemKind::CubeSqtm:
      return "cube_sqtm";
  }
  return "square";
}

ProblemKind problem_kind_from_string(std::string_view text) {
  if (text == "square") return ProblemKind::Square;
  if (text == "cube_stm" || text == "cube-stm") return ProblemKind::CubeStm;
  if (text == "cube_sqtm" || text == "cube-sqtm") return ProblemKind::CubeSqtm;
  throw SchemaError("unknown problem kind '" + std::string(text) + "'");
}

int reduction_side(Kind kind, std::size_t n, std::size_t m) {
  if (kind == Kind::Square) return static_cast<int>(2 * (std::max(m, n) + 2 * n));
  return static_cast<int>(6 * n + 2 * m);
}

int reduction_budget(std::size_t n) { return static_cast<int>(2 * n) - 1; }

MoveSequence a_word(const CubicalInstance& inst, std::size_t i, Kind kind) {
  require_index(inst, i);
  MoveSequence word;
  for (std::size_t j = 1; j <= inst.m(); ++j) {
    if (inst.bit(i, j)) word.push_back(column_move(kind, static_cast<int>(j), Rotation::Cw));
  }
  return word;
}

MoveSequence b_word(const CubicalInstance& inst, std::size_t i, Kind kind) {
  require_index(inst, i);
  MoveSequence word;
  append_b(word, inst, i, kind);
  return word;
}

MoveSequence t_word_with_order(const CubicalInstance& inst, Kind kind,
                               std::span<const std::size_t> b_order) {
  std::vector<std::size_t> sorted(b_order.begin(), b_order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(inst.n());
  std::iota(expected.begin(), expected.end(), std::size_t{1});
  if (sorted != expected) throw InvalidArgument("b order must be a permutation of 1..n");

  // t = a_1 o b_{o1} o ... o b_{on}: the rightmost factor acts first.
  MoveSequence word;
  for (auto it = b_order.rbegin(); it != b_order.rend(); ++it) append_b(word, inst, *it, kind);
  const MoveSequence a1 = a_word(inst, 1, kind);
  word.insert(word.end(), a1.begin(), a1.end());
  return word;
}

MoveSequence t_word(const CubicalInstance& inst, Kind kind) {
  std::vector<std::size_t> order(inst.n());
  std::iota(order.begin(), order.end(), std::size_t{1});
  return t_word_with_order(inst, kind, order);
}

StickerPermutation build_a(const CubicalInstance& inst, std::size_t i, Kind kind) {
  require_valid_instance(inst);
  const Puzzle puzzle(kind, reduction_side(kind, inst.n(), inst.m()));
  return sequence_to_permutation(puzzle, a_word(inst, i, kind));
}

StickerPermutation build_b(const CubicalInstance& inst, std::size_t i, Kind kind) {
  require_valid_instance(inst);
  const Puzzle puzzle(kind, reduction_side(kind, inst.n(), inst.m()));
  return sequence_to_permutation(puzzle, b_word(inst, i, kind));
}

StickerPermutation build_t(const CubicalInstance& inst, Kind kind) {
  require_valid_instance(inst);
  const Puzzle puzzle(kind, reduction_side(kind, inst.n(), inst.m()));
  return sequence_to_permutation(puzzle, t_word(inst, kind));
}

ReducedInstance reduce(const CubicalInstance& inst, ProblemKind kind, bool group_variant) {
  require_valid_instance(inst);
  const Kind pk = puzzle_kind(kind);
  ReducedInstance out;
  out.kind = kind;
  out.group = group_variant;
  out.side = reduction_side(pk, inst.n(), inst.m());
  out.budget = reduction_budget(inst.n());
  out.source = inst;
  out.defining_word = t_word(inst, pk);
  const Puzzle puzzle(pk, out.side);
  if (group_variant) {
    out.transformation = sequence_to_permutation(puzzle, out.defining_word);
  } else {
    out.configuration = apply_sequence(out.defining_word, make_solved(pk, out.side));
  }
  return out;
}

}  // namespace rubikred
