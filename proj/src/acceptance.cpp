#include "rubikred/acceptance.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "rubikred/certificates.hpp"
#include "rubikred/coloring.hpp"
#include "rubikred/errors.hpp"
#include "rubikred/instances.hpp"
#include "rubikred/solver.hpp"

namespace rubikred {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Smallest m with 2^m >= n (at least 1).
std::size_t min_bits(std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(n - 1)));
}

CubicalInstance labels(std::initializer_list<std::string_view> text) {
  const std::vector<std::string_view> v(text);
  return CubicalInstance::from_strings(v);
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "FAILED: " << what << "; ";
    ok = ok && cond;
  }
};

// 1 ---------------------------------------------------------------------------
void worked_example(Rng&, Outcome& out) {
  const CubicalInstance inst = labels({"011", "110", "111", "100", "000"});
  const ReducedInstance sq = reduce(inst, ProblemKind::Square, false);
  const ReducedInstance stm = reduce(inst, ProblemKind::CubeStm, false);
  const ReducedInstance sqtm = reduce(inst, ProblemKind::CubeSqtm, true);
  out.require(sq.side == 30 && sq.budget == 9, "square side/k");
  out.require(stm.side == 36 && stm.budget == 9, "cube STM side/k");
  out.require(sqtm.side == 36 && sqtm.budget == 9, "cube SQTM side/k");
  out.detail << "square side " << sq.side << " k " << sq.budget << ", cube side " << stm.side
             << " k " << stm.budget;
}

// 2 ---------------------------------------------------------------------------
PuzzleConfig simulate_cb(const CubicalInstance& inst, Kind kind) {
  MoveSequence word;
  for (std::size_t i = inst.n(); i >= 1; --i) {
    const MoveSequence b = b_word(inst, i, kind);
    word.insert(word.end(), b.begin(), b.end());
  }
  return apply_sequence(word, make_solved(kind, reduction_side(kind, inst.n(), inst.m())));
}

void coloring_equality(Rng& rng, Outcome& out) {
  std::size_t stickers = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = pick(rng, 2, 8);
    const std::size_t m = pick(rng, min_bits(n), 8);
    const CubicalInstance inst = random_cubical_instance(rng, n, m);
    const PredictedColoring sq = predict_square_cb(inst);
    const int s = sq.side;
    out.require(sq.covered_count() == static_cast<std::size_t>(2 * s * s), "square coverage is +-z");
    out.require(agrees_with(sq, simulate_cb(inst, Kind::Square)), "square C_b trial " + std::to_string(trial));
    const PredictedColoring cube = predict_cube_cb(inst);
    out.require(cube.covered_count() == cube.colors.size(), "cube coverage is total");
    out.require(agrees_with(cube, simulate_cb(inst, Kind::Cube)), "cube C_b trial " + std::to_string(trial));
    stickers += sq.covered_count() + cube.covered_count();
  }
  out.detail << "100 instances, " << stickers << " stickers compared";
}

// 3 ---------------------------------------------------------------------------
void forward_direction(Rng& rng, Outcome& out) {
  std::size_t verified = 0;
  std::size_t largest = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = trial == 0 ? 40 : pick(rng, 2, 40);
    const std::size_t m = trial == 0 ? 40 : pick(rng, min_bits(n), 40);
    const YesInstance yes = random_yes_instance(rng, n, m);
    const MoveSequence square = synthesize_square_solution(yes.instance, yes.certificate);
    const MoveSequence cube = synthesize_cube_solution(yes.instance, yes.certificate, Metric::Sqtm);
    out.require(square.size() == 2 * n - 1, "square length 2n-1");
    out.require(cube.size() == 2 * n - 1, "cube length 2n-1");
    for (ProblemKind kind : {ProblemKind::Square, ProblemKind::CubeStm, ProblemKind::CubeSqtm}) {
      for (bool group : {false, true}) {
        const ReducedInstance ri = reduce(yes.instance, kind, group);
        const Verdict v = verify_solution(ri, kind == ProblemKind::Square ? square : cube);
        out.require(v.accepted, std::string(to_string(kind)) + (group ? " group" : "") +
                                    " trial " + std::to_string(trial));
        verified += v.accepted ? 1 : 0;
        largest = std::max(largest, static_cast<std::size_t>(ri.side));
      }
    }
  }
  out.detail << verified << "/300 sequences verified, largest side " << largest;
}

// 4 ---------------------------------------------------------------------------
void yes_side(Rng&, Outcome& out) {
  const CubicalInstance inst = labels({"1", "0"});
  out.require(find_ham_path(inst).has_value(), "[1,0] has a Hamiltonian path");
  for (bool group : {false, true}) {
    const auto t0 = Clock::now();
    SearchBudget budget;
    budget.strategy = Strategy::Unidirectional;
    const ReducedInstance sq = reduce(inst, ProblemKind::Square, group);
    out.require(sq.side == 12 && sq.budget == 3, "square side 12, k 3");
    out.require(decide(sq, budget) == Decision::Yes, "square decided yes");
    const double square_s = since(t0);
    out.require(square_s < 10.0, "square under 10 s");

    const auto t1 = Clock::now();
    budget.strategy = Strategy::Bidirectional;
    const ReducedInstance cube = reduce(inst, ProblemKind::CubeSqtm, group);
    // 6n + 2m = 14 for n = 2, m = 1.
    out.require(cube.side == 14 && cube.budget == 3, "cube side 14, k 3");
    out.require(decide(cube, budget) == Decision::Yes, "cube SQTM decided yes");
    const double cube_s = since(t1);
    out.require(cube_s < 600.0, "cube under 10 min");
    out.detail << (group ? "group" : "non-group") << ": square " << square_s << " s, cube "
               << cube_s << " s; ";
  }
}

// 5 ---------------------------------------------------------------------------
void no_side(Rng&, Outcome& out) {
  const CubicalInstance inst = labels({"11", "00"});
  out.require(!find_ham_path(inst).has_value(), "[11,00] has no Hamiltonian path");
  for (bool group : {false, true}) {
    const auto t0 = Clock::now();
    SearchBudget budget;
    budget.strategy = Strategy::Unidirectional;
    budget.prune = false;
    const ReducedInstance sq = reduce(inst, ProblemKind::Square, group);
    const SearchResult r = solve_instance(sq, budget);
    out.require(r.status == SearchStatus::NoSolution, "square decided no");
    // Iterative deepening over depths 0..3 without pruning generates
    // sum_{d<=3} sum_{k<=d} 24^k states; the last depth alone is 24^3.
    out.require(r.nodes >= 24u * 24u * 24u, "square search covered 24^3 sequences");
    const double square_s = since(t0);
    out.require(square_s < 60.0, "square under 60 s");

    const auto t1 = Clock::now();
    budget = SearchBudget{};
    budget.strategy = Strategy::Bidirectional;
    const ReducedInstance cube = reduce(inst, ProblemKind::CubeStm, group);
    out.require(enumerate_moves(Kind::Cube, cube.side, Metric::Stm).size() == 144, "144 STM moves");
    out.require(decide(cube, budget) == Decision::No, "cube STM decided no");
    const double cube_s = since(t1);
    out.require(cube_s < 900.0, "cube under 15 min");
    out.detail << (group ? "group" : "non-group") << ": square " << r.nodes << " nodes "
               << square_s << " s, cube " << cube_s << " s; ";
  }
}

// 6 ---------------------------------------------------------------------------
void gadget_equivalence(Rng&, Outcome& out) {
  std::size_t checked = 0;
  std::size_t hamiltonian = 0;
  std::size_t rejected = 0;
  for (unsigned mask = 1; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) < 4) continue;
    std::vector<Point> pts;
    for (int k = 0; k < 9; ++k) {
      if (mask & (1u << k)) pts.push_back({k % 3, k / 3});
    }
    const GridGraph g(pts);
    bool has_leaf = false;
    for (Point p : g.vertices()) has_leaf = has_leaf || g.degree(p) == 1;
    if (has_leaf) continue;

    const bool cycle = find_ham_cycle(g).has_value();
    ++checked;
    hamiltonian += cycle ? 1 : 0;
    PromiseGridInstance gadget;
    try {
      gadget = cycle_to_path(g);
    } catch (const InvalidArgument&) {
      // Top-left vertex without a right neighbour has degree 0 here.
      ++rejected;
      out.require(!cycle, "gadget rejected a Hamiltonian graph, mask " + std::to_string(mask));
      continue;
    }
    const Adjacency adj = grid_adjacency(gadget.graph);
    const auto path = ham_path_backtrack(adj, *gadget.graph.index_of(gadget.s_vertex),
                                         *gadget.graph.index_of(gadget.t_vertex), 100'000'000);
    out.require(path.has_value() == cycle, "cycle/path mismatch, mask " + std::to_string(mask));
    out.require(find_grid_ham_path(gadget.graph).has_value() == cycle,
                "cycle/any-path mismatch, mask " + std::to_string(mask));
    const CubicalInstance labels = grid_to_cubical(gadget);
    out.require(validate_promise(labels, true).ok(), "promise kept, mask " + std::to_string(mask));
    out.require(find_ham_path(labels).has_value() == cycle,
                "cycle/cubical path mismatch, mask " + std::to_string(mask));
  }
  out.detail << checked << " subgraphs, " << hamiltonian << " Hamiltonian, " << rejected
             << " with an isolated top-left vertex";
}

// 7 ---------------------------------------------------------------------------
void labelling(Rng& rng, Outcome& out) {
  std::size_t pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int w = 1;
    int h = 1;
    while (w * h < 2) {
      w = static_cast<int>(pick(rng, 1, 6));
      h = static_cast<int>(pick(rng, 1, 6));
    }
    const PromiseGridInstance inst = random_grid_instance(rng, w, h, 12);
    const std::vector<Point> order = labelling_order(inst);
    const CubicalInstance cub = grid_to_cubical(inst);
    out.require(cub.n() == inst.graph.size(), "one label per vertex");
    out.require(cub.labels.back().all_zero(), "l_n all zero");
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const bool adjacent = lattice_adjacent(order[a], order[b]);
        out.require((hamming(cub.labels[a], cub.labels[b]) == 1) == adjacent,
                    "label adjacency, trial " + std::to_string(trial));
        ++pairs;
      }
    }
  }
  out.detail << "200 graphs, " << pairs << " vertex pairs";
}

// 8 ---------------------------------------------------------------------------
void commutativity(Rng& rng, Outcome& out) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = pick(rng, 2, 6);
    const std::size_t m = pick(rng, min_bits(n), 5);
    const CubicalInstance inst = random_cubical_instance(rng, n, m);
    const std::size_t i = pick(rng, 1, n);
    const std::size_t j = pick(rng, 1, n);
    const Kind kind = trial % 2 == 0 ? Kind::Square : Kind::Cube;
    const StickerPermutation bi = build_b(inst, i, kind);
    const StickerPermutation bj = build_b(inst, j, kind);
    out.require(compose(bi, bj) == compose(bj, bi), "b_i b_j = b_j b_i, trial " + std::to_string(trial));
  }
  out.detail << "1000 triples (500 Square, 500 Cube)";
}

// 9 ---------------------------------------------------------------------------
bool parity_holds(const ReducedInstance& ri, const MoveSequence& moves) {
  const SolutionProfile prof = analyze_solution(ri, moves);
  const int n = static_cast<int>(ri.source.n());
  for (int row : ri.puzzle().coords()) {
    if (prof.row_flipped_odd(row) != (row >= 1 && row <= n)) return false;
  }
  return true;
}

void parity(Rng&, Outcome& out) {
  const CubicalInstance inst = labels({"1", "0"});
  std::size_t solver_solutions = 0;
  std::size_t brute_solutions = 0;
  for (bool group : {false, true}) {
    const ReducedInstance ri = reduce(inst, ProblemKind::Square, group);
    for (Strategy st : {Strategy::Unidirectional, Strategy::Bidirectional}) {
      for (bool prune : {false, true}) {
        SearchBudget budget;
        budget.strategy = st;
        budget.prune = prune;
        const SearchResult r = solve_instance(ri, budget);
        out.require(r.status == SearchStatus::Solved, "solver finds a solution");
        out.require(parity_holds(ri, r.moves), "parity of solver solution " + format_sequence(r.moves));
        ++solver_solutions;
      }
    }
    // Every optimal solution, by enumerating all 24^3 words.
    const std::vector<Move> moves = enumerate_moves(Kind::Square, ri.side, Metric::SquareFlip);
    MoveSequence w(3);
    for (const Move& a : moves) {
      for (const Move& b : moves) {
        for (const Move& c : moves) {
          w = {a, b, c};
          if (!verify_solution(ri, w).accepted) continue;
          ++brute_solutions;
          out.require(parity_holds(ri, w), "parity of optimal solution " + format_sequence(w));
        }
      }
    }
  }
  out.require(brute_solutions > 0, "optimal solutions exist");
  out.detail << solver_solutions << " solver solutions, " << brute_solutions
             << " optimal solutions by enumeration";
}

// 10 --------------------------------------------------------------------------
// Breadth-first levels 0..depth of the Cayley graph from the identity.
std::map<std::vector<std::uint32_t>, int> bfs_levels(Kind kind, int side, Metric metric, int depth) {
  const Puzzle puzzle(kind, side);
  std::vector<StickerPermutation> gens;
  for (const Move& mv : enumerate_moves(kind, side, metric)) gens.push_back(move_to_permutation(mv, kind, side));
  std::map<std::vector<std::uint32_t>, int> dist;
  std::vector<StickerPermutation> frontier{StickerPermutation::identity(puzzle)};
  auto key = [](const StickerPermutation& p) {
    return std::vector<std::uint32_t>(p.map().begin(), p.map().end());
  };
  dist.emplace(key(frontier.front()), 0);
  for (int d = 1; d <= depth; ++d) {
    std::vector<StickerPermutation> next;
    for (const StickerPermutation& p : frontier) {
      for (const StickerPermutation& g : gens) {
        StickerPermutation q = compose(g, p);
        if (dist.emplace(key(q), d).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

void optimality(Rng& rng, Outcome& out) {
  struct Case {
    Kind kind;
    int side;
    Metric metric;
    int max_len;
  };
  for (const Case c : {Case{Kind::Square, 6, Metric::SquareFlip, 5}, Case{Kind::Cube, 4, Metric::Stm, 4}}) {
    // Levels below max_len suffice: a scramble of length L missing from
    // them is at distance exactly L.
    const auto dist = bfs_levels(c.kind, c.side, c.metric, c.max_len - 1);
    const Puzzle puzzle(c.kind, c.side);
    std::map<int, int> histogram;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t len = pick(rng, 0, static_cast<std::size_t>(c.max_len));
      const MoveSequence scramble = random_scramble(rng, c.kind, c.side, c.metric, len);
      const StickerPermutation t = sequence_to_permutation(puzzle, scramble);
      const auto it = dist.find(std::vector<std::uint32_t>(t.map().begin(), t.map().end()));
      const int truth = it != dist.end() ? it->second : static_cast<int>(len);
      SearchBudget budget;
      budget.max_depth = c.max_len;
      budget.strategy = trial % 2 == 0 ? Strategy::Bidirectional : Strategy::Unidirectional;
      const SearchResult r = solve_optimal(t, c.metric, budget);
      out.require(r.status == SearchStatus::Solved, "scramble solved");
      out.require(static_cast<int>(r.moves.size()) == truth,
                  std::string(to_string(c.kind)) + " scramble " + format_sequence(scramble) +
                      ": solver " + std::to_string(r.moves.size()) + " vs BFS " + std::to_string(truth));
      ++histogram[truth];
    }
    out.detail << to_string(c.kind) << " side " << c.side << " distances";
    for (auto [d, k] : histogram) out.detail << " " << d << ":" << k;
    out.detail << "; ";
  }
}

struct CriterionDef {
  const char* name;
  double limit;
  std::function<void(Rng&, Outcome&)> run;
};

const std::vector<CriterionDef>& definitions() {
  static const std::vector<CriterionDef> all = {
      {"worked-example-fidelity", 1.0, worked_example},
      {"coloring-prediction-equality", 30.0, coloring_equality},
      {"forward-direction-at-scale", 60.0, forward_direction},
      {"answer-preservation-yes", 610.0, yes_side},
      {"answer-preservation-no", 960.0, no_side},
      {"gadget-equivalence", 60.0, gadget_equivalence},
      {"labeling-correctness", 60.0, labelling},
      {"b-commutativity", 30.0, commutativity},
      {"row-parity", 60.0, parity},
      {"oracle-optimality", 300.0, optimality},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("criterion id out of range");
  const CriterionDef& def = definitions()[static_cast<std::size_t>(id - 1)];
  CriterionResult result{id, def.name, false, 0.0, def.limit, ""};
  Rng rng(seed + static_cast<std::uint64_t>(id));
  Outcome out;
  const auto t0 = Clock::now();
  try {
    def.run(rng, out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = since(t0);
  if (result.seconds > def.limit) out.require(false, "time limit exceeded");
  result.passed = out.ok;
  result.detail = out.detail.str();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (options.only && *options.only != id) continue;
    results.push_back(run_criterion(id, options.seed));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %g s", r.seconds, r.limit_seconds);
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " +
                     r.name + " " + timing;
  if (!r.detail.empty()) line += "  " + r.detail;
  return line;
}

}  // namespace rubikred
