#pragma once

// Hamiltonian-path certificates to (2n-1)-move solutions, solution
// verification, and the proof-side diagnostics over candidate solutions.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rubikred/reduction.hpp"

namespace rubikred {

// 1-based ordering i_1..i_n of the labels.
struct PathCertificate {
  std::vector<std::size_t> ordering;

  friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

// Throws InvalidArgument unless the ordering is a permutation of 1..n with
// i_1 = 1, i_n = n and consecutive labels at Hamming distance one.
void validate_certificate(const CubicalInstance& inst, const PathCertificate& cert);

// y_{i_1} x_{j_1} y_{i_2} ... x_{j_{n-1}} y_{i_n}; j_p is the bit where
// l_{i_p} and l_{i_{p+1}} differ.
MoveSequence synthesize_square_solution(const CubicalInstance& inst, const PathCertificate& cert);

// z_{m+i_1}:ccw, x_{j_1}, z_{m+i_2}:ccw, ..., z_{m+i_n}:ccw where the x turn
// is cw when l_{i_p} has bit j_p clear and ccw otherwise. Quarter turns only,
// so the same word serves STM and SQTM.
MoveSequence synthesize_cube_solution(const CubicalInstance& inst, const PathCertificate& cert,
                                      Metric metric);

enum class VerdictReason : std::uint8_t { LengthExceeded, NotSolved, IllegalMove };
std::string_view to_string(VerdictReason reason);

struct Verdict {
  bool accepted = false;
  std::size_t length = 0;
  std::vector<VerdictReason> reasons;

  bool has(VerdictReason r) const;
};

Verdict verify_solution(const ReducedInstance& ri, std::span<const Move> moves);

// Observational counts over a move sequence. Index sets are 1-based label
// indices i (for the Cube they stand for slice index m+i).
struct SolutionProfile {
  std::size_t length = 0;
  // (axis, |index|) -> number of moves.
  std::map<std::pair<Axis, int>, std::size_t> counts;

  // Square: signed row index -> number of flips of that row, for every row.
  std::map<int, std::size_t> row_flips;
  // Square: i in 1..n with exactly one index-i row move.
  std::set<std::size_t> square_one;
  std::size_t column_moves = 0;

  // Cube: partition of 1..n by the number of index-(m+i) moves.
  std::set<std::size_t> zero, one, two, more;
  std::size_t c_one = 0, c_two = 0, c_more = 0;
  std::size_t c_j = 0, c_vertical = 0, c_other = 0;

  // Smallest index with no index-u move in the window {max(m,n)+1 ..
  // max(m,n)+2n} (Square) or {m+n+1 .. m+3n} (Cube).
  std::optional<int> unused_index;

  bool row_flipped_odd(int row) const;
};

SolutionProfile analyze_solution(const ReducedInstance& ri, std::span<const Move> moves);

// Two stickers are (p1, p2, q)-paired when they share a face and a quadrant
// of it, sit on the same slice at the in-face coordinate of magnitude q, and
// have magnitudes p1 and p2 in the other in-face coordinate.
bool are_paired(const Puzzle& puzzle, const StickerPos& a, const StickerPos& b, int p1, int p2,
                int q);

struct PairTrace {
  bool initially_paired = false;
  // Move index at which an index-p1/p2 move touching one of the stickers
  // released the pair; tracking stops there.
  std::optional<std::size_t> released_at;
  // Move indices that broke the pairing without being such a move.
  std::vector<std::size_t> violations;
};

// Replays `moves` and records where pairing is lost.
PairTrace track_paired_stickers(const Puzzle& puzzle, const StickerPos& a, const StickerPos& b,
                                int p1, int p2, int q, std::span<const Move> moves);

}  // namespace rubikred
