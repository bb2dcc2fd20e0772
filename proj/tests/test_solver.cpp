#include <gtest/gtest.h>

#include <array>
#include <map>
#include <unordered_map>

#include "rubikred/certificates.hpp"
#include "rubikred/errors.hpp"
#include "rubikred/instances.hpp"
#include "rubikred/solver.hpp"

using namespace rubikred;

namespace {

CubicalInstance labels(std::initializer_list<const char*> text) {
  CubicalInstance inst;
  for (const char* t : text) inst.labels.push_back(Bitstring::parse(t));
  return inst;
}

using State = std::vector<std::uint32_t>;

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : s) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Colours renamed in order of first appearance, so recoloured copies coincide.
State canonical_ids(const State& s) {
  std::array<int, kColorCount> rename;
  rename.fill(-1);
  int next = 0;
  State out;
  for (auto c : s) {
    int& r = rename[c];
    if (r < 0) r = next++;
    out.push_back(static_cast<std::uint32_t>(r));
  }
  return out;
}

State canonical(std::span<const Color> colors) {
  State s;
  for (Color c : colors) s.push_back(static_cast<std::uint32_t>(c));
  return canonical_ids(s);
}

State apply_perm(const StickerPermutation& p, const State& s) {
  State out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[p.map()[i]] = s[i];
  return out;
}

// Breadth-first distances from `root` using every move of the metric.
std::unordered_map<State, int, StateHash> bfs(const Puzzle& puzzle, Metric metric, const State& root, int depth,
                                              bool colours) {
  std::vector<StickerPermutation> gens;
  for (const Move& mv : enumerate_moves(puzzle.kind(), puzzle.side(), metric))
    gens.push_back(move_to_permutation(mv, puzzle.kind(), puzzle.side()));
  std::unordered_map<State, int, StateHash> dist{{root, 0}};
  std::vector<State> frontier{root};
  for (int d = 1; d <= depth; ++d) {
    std::vector<State> next;
    for (const State& s : frontier)
      for (const auto& g : gens) {
        State t = apply_perm(g, s);
        if (colours) t = canonical_ids(t);
        if (dist.emplace(t, d).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return dist;
}

State identity_state(const Puzzle& p) {
  State s(p.sticker_count());
  for (std::uint32_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

State labels_of(const StickerPermutation& t) {
  // The sticker at i now sits at t(i): the position t(i) carries label i.
  State s(t.map().size());
  for (std::uint32_t i = 0; i < s.size(); ++i) s[t.map()[i]] = i;
  return s;
}

void expect_solves(const StickerPermutation& t, const SearchResult& r) {
  ASSERT_EQ(r.status, SearchStatus::Solved);
  EXPECT_TRUE(compose(sequence_to_permutation(t.puzzle(), r.moves), t).is_identity());
}

struct Case {
  Kind kind;
  int side;
  Metric metric;
  int depth;
};

}  // namespace

TEST(Solver, SolvedStartIsEmpty) {
  PuzzleConfig c0 = make_solved(Kind::Square, 12);
  for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
    auto r = solve_optimal(c0, Metric::SquareFlip, {.max_depth = 3, .strategy = st});
    EXPECT_EQ(r.status, SearchStatus::Solved);
    EXPECT_TRUE(r.moves.empty());
  }
}

TEST(Solver, SingleFlip) {
  std::vector<Move> one{Move{Axis::X, 1, std::nullopt}};
  PuzzleConfig c = apply_sequence(one, make_solved(Kind::Square, 12));
  for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
    auto r = solve_optimal(c, Metric::SquareFlip, {.max_depth = 3, .strategy = st});
    ASSERT_EQ(r.status, SearchStatus::Solved);
    EXPECT_EQ(r.moves.size(), 1u);
    EXPECT_TRUE(is_solved(apply_sequence(r.moves, c)));
  }
}

TEST(Solver, BudgetErrors) {
  PuzzleConfig c0 = make_solved(Kind::Cube, 3);
  EXPECT_THROW(solve_optimal(c0, Metric::SquareFlip, {.max_depth = 1}), InvalidArgument);
  EXPECT_THROW(solve_optimal(c0, Metric::Stm, {.max_depth = -1}), InvalidArgument);
  EXPECT_THROW(solve_optimal(c0, Metric::Stm, {.max_depth = 1, .node_limit = 0}), InvalidArgument);
}

TEST(Solver, CapacityExceeded) {
  Rng rng(5);
  auto scramble = random_scramble(rng, Kind::Cube, 4, Metric::Stm, 4);
  PuzzleConfig c = apply_sequence(scramble, make_solved(Kind::Cube, 4));
  for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
    auto r = solve_optimal(c, Metric::Stm, {.max_depth = 4, .node_limit = 500, .strategy = st});
    EXPECT_EQ(r.status, SearchStatus::CapacityExceeded);
  }
  auto ri = reduce(labels({"11", "00"}), ProblemKind::Square, true);
  EXPECT_EQ(decide(ri, {.node_limit = 100}), Decision::CapacityExceeded);
}

TEST(Decide, Examples) {
  for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
    SearchBudget b{.strategy = st};
    EXPECT_EQ(decide(reduce(labels({"1", "0"}), ProblemKind::Square, true), b), Decision::Yes);
    EXPECT_EQ(decide(reduce(labels({"1", "0"}), ProblemKind::Square, false), b), Decision::Yes);
    EXPECT_EQ(decide(reduce(labels({"11", "00"}), ProblemKind::Square, true), b), Decision::No);
    EXPECT_EQ(decide(reduce(labels({"11", "00"}), ProblemKind::Square, false), b), Decision::No);
  }
  auto cube = reduce(labels({"1", "0"}), ProblemKind::CubeSqtm, true);
  auto r = solve_instance(cube, {});
  ASSERT_EQ(r.status, SearchStatus::Solved);
  EXPECT_EQ(r.moves.size(), 3u);
  EXPECT_TRUE(verify_solution(cube, r.moves).accepted);
}

// Solver answers agree with Hamiltonian path existence on every small instance.
TEST(Decide, AgreesWithPathOracle) {
  std::vector<CubicalInstance> cases{labels({"0"}),         labels({"1", "0"}),  labels({"11", "00"}),
                                     labels({"01", "00"}),  labels({"10", "00"}), labels({"11", "01", "00"})};
  for (const auto& inst : cases) {
    bool path = find_ham_path(inst).has_value();
    for (ProblemKind kind : {ProblemKind::Square, ProblemKind::CubeStm, ProblemKind::CubeSqtm}) {
      if (kind != ProblemKind::Square && inst.n() > 2) continue;
      for (bool group : {true, false}) {
        auto ri = reduce(inst, kind, group);
        EXPECT_EQ(decide(ri, {}), path ? Decision::Yes : Decision::No)
            << to_string(kind) << " n=" << inst.n() << " group=" << group;
      }
    }
  }
}

TEST(Decide, ParityOfEverySolution) {
  auto ri = reduce(labels({"1", "0"}), ProblemKind::Square, true);
  for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
    for (bool prune : {true, false}) {
      auto r = solve_instance(ri, {.strategy = st, .prune = prune});
      ASSERT_EQ(r.status, SearchStatus::Solved);
      EXPECT_EQ(format_sequence(r.moves), "y:1 x:1 y:2");
      SolutionProfile prof = analyze_solution(ri, r.moves);
      for (int row : ri.puzzle().coords()) EXPECT_EQ(prof.row_flipped_odd(row), row == 1 || row == 2);
    }
  }
}

TEST(Pruning, PairRules) {
  const Move x1{Axis::X, 1, Rotation::Cw}, x1c{Axis::X, 1, Rotation::Ccw}, x2{Axis::X, 2, Rotation::Cw},
      z1{Axis::Z, 1, Rotation::Cw};
  EXPECT_TRUE(pair_allowed(x1, x2, Metric::Stm));
  EXPECT_FALSE(pair_allowed(x2, x1, Metric::Stm));
  EXPECT_FALSE(pair_allowed(x1, x1, Metric::Stm));
  EXPECT_FALSE(pair_allowed(x1, x1c, Metric::Sqtm));
  EXPECT_TRUE(pair_allowed(x1, x1, Metric::Sqtm));
  EXPECT_TRUE(pair_allowed(z1, x1, Metric::Stm));
  EXPECT_FALSE(triple_allowed(x1, x1, x1, Metric::Sqtm));
  const Move c1{Axis::X, 1, std::nullopt}, r1{Axis::Y, 1, std::nullopt};
  EXPECT_FALSE(pair_allowed(c1, c1, Metric::SquareFlip));
  EXPECT_TRUE(pair_allowed(c1, r1, Metric::SquareFlip));
}

// Optimal lengths match breadth-first distances, in both variants and for
// every strategy/pruning combination.
TEST(Optimality, MatchesBreadthFirstDistances) {
  const std::vector<Case> cases{{Kind::Square, 4, Metric::SquareFlip, 5},
                                {Kind::Square, 6, Metric::SquareFlip, 4},
                                {Kind::Cube, 3, Metric::Stm, 3},
                                {Kind::Cube, 4, Metric::Sqtm, 3},
                                {Kind::Cube, 2, Metric::Stm, 4}};
  Rng rng(77);
  for (const Case& cs : cases) {
    Puzzle p(cs.kind, cs.side);
    auto group_dist = bfs(p, cs.metric, identity_state(p), cs.depth, false);
    auto colour_dist = bfs(p, cs.metric, canonical(make_solved(cs.kind, cs.side).colors()), cs.depth, true);
    for (int trial = 0; trial < 12; ++trial) {
      auto scramble = random_scramble(rng, cs.kind, cs.side, cs.metric, 1 + trial % cs.depth);
      auto t = sequence_to_permutation(p, scramble);
      PuzzleConfig c = apply_permutation(t, make_solved(cs.kind, cs.side));
      // A scramble's inverse is a path back, so its distance is within reach.
      const int dg = group_dist.at(labels_of(t));
      const int dc = colour_dist.at(canonical(c.colors()));
      for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
        for (bool prune : {true, false}) {
          SearchBudget b{.max_depth = cs.depth, .strategy = st, .prune = prune};
          auto rg = solve_optimal(t, cs.metric, b);
          expect_solves(t, rg);
          EXPECT_EQ(static_cast<int>(rg.moves.size()), dg) << format_sequence(scramble);
          auto rc = solve_optimal(c, cs.metric, b);
          ASSERT_EQ(rc.status, SearchStatus::Solved);
          EXPECT_EQ(static_cast<int>(rc.moves.size()), dc) << format_sequence(scramble);
          EXPECT_TRUE(is_solved(apply_sequence(rc.moves, c)));
          if (dg > 0) {
            b.max_depth = dg - 1;
            EXPECT_EQ(solve_optimal(t, cs.metric, b).status, SearchStatus::NoSolution);
          }
        }
      }
    }
  }
}

TEST(Determinism, StrategiesReturnTheSameSequence) {
  Rng rng(78);
  for (int trial = 0; trial < 15; ++trial) {
    auto scramble = random_scramble(rng, Kind::Cube, 3, Metric::Stm, 3);
    PuzzleConfig c = apply_sequence(scramble, make_solved(Kind::Cube, 3));
    auto a = solve_optimal(c, Metric::Stm, {.max_depth = 3, .strategy = Strategy::Unidirectional});
    auto b = solve_optimal(c, Metric::Stm, {.max_depth = 3, .strategy = Strategy::Bidirectional});
    auto u = solve_optimal(c, Metric::Stm, {.max_depth = 3, .strategy = Strategy::Unidirectional, .prune = false});
    EXPECT_EQ(a.moves, b.moves);
    EXPECT_EQ(a.moves, u.moves);
  }
}

TEST(Determinism, LexLeastAmongOptimal) {
  // Every optimal 1-move solution of a single flip scramble; the least must win.
  Puzzle p(Kind::Square, 4);
  for (const Move& mv : enumerate_moves(Kind::Square, 4, Metric::SquareFlip)) {
    std::vector<Move> one{mv};
    auto t = sequence_to_permutation(p, one);
    auto r = solve_optimal(t, Metric::SquareFlip, {.max_depth = 2});
    ASSERT_EQ(r.moves.size(), 1u);
    EXPECT_EQ(r.moves.front(), mv);
  }
}
