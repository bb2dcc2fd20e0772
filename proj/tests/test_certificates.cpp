#include <gtest/gtest.h>

#include <algorithm>

#include "rubikred/certificates.hpp"
#include "rubikred/errors.hpp"
#include "rubikred/instances.hpp"

using namespace rubikred;

namespace {

CubicalInstance labels(std::initializer_list<const char*> text) {
  CubicalInstance inst;
  for (const char* t : text) inst.labels.push_back(Bitstring::parse(t));
  return inst;
}

CubicalInstance example_n5() { return labels({"011", "110", "111", "100", "000"}); }
PathCertificate path_n5() { return {{1, 3, 2, 4, 5}}; }

}  // namespace

TEST(Certificate, Validation) {
  CubicalInstance inst = example_n5();
  EXPECT_NO_THROW(validate_certificate(inst, path_n5()));
  EXPECT_THROW(validate_certificate(inst, {{1, 2, 3, 4, 5}}), InvalidArgument);
  EXPECT_THROW(validate_certificate(inst, {{3, 1, 2, 4, 5}}), InvalidArgument);
  EXPECT_THROW(validate_certificate(inst, {{1, 3, 3, 4, 5}}), InvalidArgument);
  EXPECT_THROW(validate_certificate(inst, {{1, 3, 2, 5}}), InvalidArgument);
  EXPECT_THROW(validate_certificate(inst, {{1, 3, 2, 4, 6}}), InvalidArgument);
}

TEST(Synthesis, SquareExamples) {
  EXPECT_EQ(format_sequence(synthesize_square_solution(example_n5(), path_n5())),
            "y:1 x:1 y:3 x:3 y:2 x:2 y:4 x:1 y:5");
  EXPECT_EQ(format_sequence(synthesize_square_solution(labels({"1", "0"}), {{1, 2}})), "y:1 x:1 y:2");
  EXPECT_EQ(format_sequence(synthesize_square_solution(labels({"0"}), {{1}})), "y:1");
}

TEST(Synthesis, CubeExamples) {
  auto seq = synthesize_cube_solution(example_n5(), path_n5(), Metric::Sqtm);
  EXPECT_EQ(format_sequence(seq),
            "z:4:ccw x:1:cw z:6:ccw x:3:ccw z:5:ccw x:2:ccw z:7:ccw x:1:ccw z:8:ccw");
  EXPECT_EQ(synthesize_cube_solution(example_n5(), path_n5(), Metric::Stm), seq);
  for (const Move& mv : seq) EXPECT_NE(mv.rotation, Rotation::Half);
  EXPECT_EQ(format_sequence(synthesize_cube_solution(labels({"1", "0"}), {{1, 2}}, Metric::Stm)),
            "z:2:ccw x:1:ccw z:3:ccw");
  EXPECT_THROW(synthesize_cube_solution(example_n5(), path_n5(), Metric::SquareFlip), InvalidArgument);
}

TEST(Verify, FiveLabelExampleAllVariants) {
  for (ProblemKind kind : {ProblemKind::Square, ProblemKind::CubeStm, ProblemKind::CubeSqtm}) {
    for (bool group : {true, false}) {
      auto ri = reduce(example_n5(), kind, group);
      auto seq = kind == ProblemKind::Square ? synthesize_square_solution(ri.source, path_n5())
                                             : synthesize_cube_solution(ri.source, path_n5(), ri.metric());
      Verdict v = verify_solution(ri, seq);
      EXPECT_TRUE(v.accepted) << to_string(kind) << " group=" << group;
      EXPECT_EQ(v.length, 9u);
      EXPECT_TRUE(v.reasons.empty());
    }
  }
}

TEST(Verify, RejectionReasons) {
  auto ri = reduce(labels({"1", "0"}), ProblemKind::Square, false);
  Verdict empty = verify_solution(ri, {});
  EXPECT_FALSE(empty.accepted);
  EXPECT_TRUE(empty.has(VerdictReason::NotSolved));

  // A correct 3-move solution padded with a cancelling pair: solved, but over budget.
  auto seq = parse_sequence("y:1 x:1 y:2 x:3 x:3", Kind::Square, ri.side);
  Verdict longer = verify_solution(ri, seq);
  EXPECT_FALSE(longer.accepted);
  EXPECT_TRUE(longer.has(VerdictReason::LengthExceeded));
  EXPECT_FALSE(longer.has(VerdictReason::NotSolved));

  auto cube = reduce(labels({"1", "0"}), ProblemKind::CubeSqtm, true);
  std::vector<Move> half{Move{Axis::X, 1, Rotation::Half}};
  Verdict illegal = verify_solution(cube, half);
  EXPECT_FALSE(illegal.accepted);
  EXPECT_TRUE(illegal.has(VerdictReason::IllegalMove));
}

// Every random yes-instance yields a 2n-1 move solution in every variant; a
// group solution also solves C_t, and every SQTM solution is an STM solution.
TEST(Verify, ForwardDirectionOnRandomYesInstances) {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t m = 2 + trial % 6;
    std::size_t n = std::min<std::size_t>(2 + trial % 9, std::size_t{1} << m);
    YesInstance yes = random_yes_instance(rng, n, m);
    const CubicalInstance& inst = yes.instance;
    auto sq = synthesize_square_solution(inst, yes.certificate);
    auto cu = synthesize_cube_solution(inst, yes.certificate, Metric::Sqtm);
    ASSERT_EQ(sq.size(), 2 * n - 1);
    ASSERT_EQ(cu.size(), 2 * n - 1);
    for (bool group : {true, false}) {
      EXPECT_TRUE(verify_solution(reduce(inst, ProblemKind::Square, group), sq).accepted);
      EXPECT_TRUE(verify_solution(reduce(inst, ProblemKind::CubeSqtm, group), cu).accepted);
      EXPECT_TRUE(verify_solution(reduce(inst, ProblemKind::CubeStm, group), cu).accepted);
    }
    auto g = reduce(inst, ProblemKind::Square, true);
    auto undone = compose(sequence_to_permutation(g.puzzle(), sq), *g.transformation);
    EXPECT_TRUE(undone.is_identity());
    EXPECT_TRUE(is_solved(apply_sequence(sq, *reduce(inst, ProblemKind::Square, false).configuration)));
  }
}

TEST(Profile, SquareSynthesisParity) {
  auto ri = reduce(example_n5(), ProblemKind::Square, true);
  auto seq = synthesize_square_solution(ri.source, path_n5());
  SolutionProfile prof = analyze_solution(ri, seq);
  EXPECT_EQ(prof.length, 9u);
  for (int row : ri.puzzle().coords()) EXPECT_EQ(prof.row_flipped_odd(row), row >= 1 && row <= 5) << row;
  EXPECT_EQ(prof.square_one, (std::set<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(prof.column_moves, 4u);
  std::size_t total = 0;
  for (const auto& [key, count] : prof.counts) total += count;
  EXPECT_EQ(total, prof.length);
  EXPECT_EQ(prof.unused_index, 6);
}

TEST(Profile, CubeSynthesisCounts) {
  auto ri = reduce(example_n5(), ProblemKind::CubeSqtm, true);
  auto seq = synthesize_cube_solution(ri.source, path_n5(), Metric::Sqtm);
  SolutionProfile prof = analyze_solution(ri, seq);
  EXPECT_EQ(prof.one, (std::set<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(prof.zero.empty());
  EXPECT_TRUE(prof.two.empty());
  EXPECT_TRUE(prof.more.empty());
  EXPECT_EQ(prof.c_vertical, 0u);
  EXPECT_EQ(prof.c_j, 4u);
  EXPECT_EQ(prof.c_one, 5u);
  EXPECT_EQ(prof.c_other, 0u);
  EXPECT_EQ(prof.unused_index, 9);
}

TEST(Profile, EmptySequence) {
  for (ProblemKind kind : {ProblemKind::Square, ProblemKind::CubeStm}) {
    auto ri = reduce(example_n5(), kind, true);
    SolutionProfile prof = analyze_solution(ri, {});
    EXPECT_EQ(prof.length, 0u);
    EXPECT_TRUE(prof.counts.empty());
    EXPECT_EQ(prof.column_moves, 0u);
    EXPECT_EQ(prof.c_one + prof.c_two + prof.c_more + prof.c_j + prof.c_vertical + prof.c_other, 0u);
    for (const auto& [row, flips] : prof.row_flips) EXPECT_EQ(flips, 0u);
  }
}

TEST(Pairing, Definition) {
  Puzzle p(Kind::Cube, 10);
  EXPECT_TRUE(are_paired(p, {Face::PosZ, 1, 3}, {Face::PosZ, 2, 3}, 1, 2, 3));
  EXPECT_TRUE(are_paired(p, {Face::PosZ, -1, -3}, {Face::PosZ, -2, -3}, 1, 2, 3));
  EXPECT_TRUE(are_paired(p, {Face::NegY, 3, 1}, {Face::NegY, 3, 2}, 1, 2, 3));
  EXPECT_FALSE(are_paired(p, {Face::PosZ, 1, 3}, {Face::PosZ, -2, 3}, 1, 2, 3));
  EXPECT_FALSE(are_paired(p, {Face::PosZ, 1, 3}, {Face::PosZ, 2, -3}, 1, 2, 3));
  EXPECT_FALSE(are_paired(p, {Face::PosZ, 1, 3}, {Face::NegZ, 2, 3}, 1, 2, 3));
  EXPECT_FALSE(are_paired(p, {Face::PosZ, 1, 3}, {Face::PosZ, 2, 3}, 1, 2, 5));
}

// Random slice turns never split a pair unless the turn is an index-p1/p2 move
// touching one of the two stickers.
TEST(Pairing, InvariantUnderRandomSequences) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int side = 8 + 2 * (trial % 2);
    Puzzle p(Kind::Cube, side);
    std::vector<int> idx;
    for (int c = 1; c < p.half(); ++c) idx.push_back(c);
    std::ranges::shuffle(idx, rng);
    const int p1 = idx[0], p2 = idx[1], q = idx[2];
    const Face face = kAllFaces[trial % 6];
    const int sq = trial & 1 ? q : -q;
    const int sp = trial & 2 ? 1 : -1;
    StickerPos a{face, sp * p1, sq}, b{face, sp * p2, sq};
    if (trial & 4) {
      a = {face, sq, sp * p1};
      b = {face, sq, sp * p2};
    }
    ASSERT_TRUE(are_paired(p, a, b, p1, p2, q));
    auto seq = random_scramble(rng, Kind::Cube, side, Metric::Stm, 30);
    PairTrace trace = track_paired_stickers(p, a, b, p1, p2, q, seq);
    EXPECT_TRUE(trace.initially_paired);
    EXPECT_TRUE(trace.violations.empty()) << format_sequence(seq);
  }
}

TEST(Pairing, ReleasedByOwnSlice) {
  Puzzle p(Kind::Cube, 10);
  std::vector<Move> seq{Move{Axis::X, 1, Rotation::Cw}};
  PairTrace trace = track_paired_stickers(p, {Face::PosZ, 1, 3}, {Face::PosZ, 2, 3}, 1, 2, 3, seq);
  EXPECT_EQ(trace.released_at, 0u);
  EXPECT_TRUE(trace.violations.empty());
}
