#pragma once

// Exhaustive bounded-depth optimal solver for Squares and Cubes.
//
// Group instances search over sticker labellings (every sticker distinct,
// goal = identity); non-group instances search over colourings, where any
// recolouring of C_0 counts as solved. Both strategies deepen one ply at a
// time, so the first solution found is optimal; among optimal solutions the
// lexicographically least (in Move order) is returned.

#include <cstdint>
#include <optional>

#include "rubikred/puzzle.hpp"
#include "rubikred/reduction.hpp"

namespace rubikred {

enum class Strategy : std::uint8_t { Unidirectional, Bidirectional };

struct SearchBudget {
  int max_depth = 0;
  // Upper bound on generated states (move applications) across the search.
  std::uint64_t node_limit = 50'000'000;
  Strategy strategy = Strategy::Bidirectional;
  // Skip consecutive moves that cancel, merge, or commute out of order.
  bool prune = true;
};

enum class SearchStatus : std::uint8_t { Solved, NoSolution, CapacityExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NoSolution;
  MoveSequence moves;
  std::uint64_t nodes = 0;
};

enum class Decision : std::uint8_t { Yes, No, CapacityExceeded };
std::string_view to_string(Decision decision);

// Pruning rules, `prev` immediately followed by `next`:
//   - same axis, different slice: indices must increase (such moves commute);
//   - same slice: never, except cw followed by cw under SQTM (a half turn
//     spelled in quarter turns), and never three in a row.
bool pair_allowed(const Move& prev, const Move& next, Metric metric);
bool triple_allowed(const Move& a, const Move& b, const Move& c, Metric metric);

SearchResult solve_optimal(const PuzzleConfig& start, Metric metric, const SearchBudget& budget);
SearchResult solve_optimal(const StickerPermutation& start, Metric metric,
                           const SearchBudget& budget);

// Searches ri with max_depth forced to ri.budget.
SearchResult solve_instance(const ReducedInstance& ri, SearchBudget budget);
Decision decide(const ReducedInstance& ri, SearchBudget budget);

}  // namespace rubikred
