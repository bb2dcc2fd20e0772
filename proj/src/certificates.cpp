#include "rubikred/certificates.hpp"

#include <algorithm>
#include <cstdlib>

#include "rubikred/errors.hpp"

namespace rubikred {

void validate_certificate(const CubicalInstance& inst, const PathCertificate& cert) {
  require_valid_instance(inst);
  const std::size_t n = inst.n();
  const auto& ord = cert.ordering;
  if (ord.size() != n) throw InvalidArgument("certificate length differs from n");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i : ord) {
    if (i < 1 || i > n || seen[i]) throw InvalidArgument("certificate is not a permutation of 1..n");
    seen[i] = true;
  }
  if (ord.front() != 1 || ord.back() != n) {
    throw InvalidArgument("certificate must start at label 1 and end at label n");
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (hamming(inst.labels[ord[p] - 1], inst.labels[ord[p + 1] - 1]) != 1) {
      throw InvalidArgument("labels " + std::to_string(ord[p]) + " and " +
                            std::to_string(ord[p + 1]) + " are not at Hamming distance one");
    }
  }
}

namespace {

std::size_t differing_bit(const Bitstring& a, const Bitstring& b) {
  for (std::size_t j = 1; j <= a.size(); ++j) {
    if (a.bit(j) != b.bit(j)) return j;
  }
  return 0;
}

}  // namespace

MoveSequence synthesize_square_solution(const CubicalInstance& inst, const PathCertificate& cert) {
  validate_certificate(inst, cert);
  const auto& ord = cert.ordering;
  MoveSequence out;
  for (std::size_t p = 0; p < ord.size(); ++p) {
    out.push_back({Axis::Y, static_cast<int>(ord[p]), std::nullopt});
    if (p + 1 == ord.size()) break;
    const std::size_t j = differing_bit(inst.labels[ord[p] - 1], inst.labels[ord[p + 1] - 1]);
    out.push_back({Axis::X, static_cast<int>(j), std::nullopt});
  }
  return out;
}

MoveSequence synthesize_cube_solution(const CubicalInstance& inst, const PathCertificate& cert,
                                      Metric metric) {
  if (metric != Metric::Stm && metric != Metric::Sqtm) {
    throw InvalidArgument("cube solutions need the STM or SQTM metric");
  }
  validate_certificate(inst, cert);
  const auto& ord = cert.ordering;
  const int m = static_cast<int>(inst.m());
  MoveSequence out;
  for (std::size_t p = 0; p < ord.size(); ++p) {
    out.push_back({Axis::Z, m + static_cast<int>(ord[p]), Rotation::Ccw});
    if (p + 1 == ord.size()) break;
    const Bitstring& here = inst.labels[ord[p] - 1];
    const std::size_t j = differing_bit(here, inst.labels[ord[p + 1] - 1]);
    // (x_j)^(-s) with s = +1 when the bit drops from 1 to 0.
    out.push_back({Axis::X, static_cast<int>(j), here.bit(j) ? Rotation::Ccw : Rotation::Cw});
  }
  return out;
}

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::LengthExceeded:
      return "length-exceeded";
    case VerdictReason::NotSolved:
      return "not-solved";
    case VerdictReason::IllegalMove:
      return "illegal-move";
  }
  return "";
}

bool Verdict::has(VerdictReason r) const {
  return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

Verdict verify_solution(const ReducedInstance& ri, std::span<const Move> moves) {
  const Puzzle puzzle = ri.puzzle();
  Verdict verdict;
  verdict.length = moves.size();
  const bool legal = std::all_of(moves.begin(), moves.end(), [&](const Move& m) {
    return is_legal_move(puzzle, m, ri.metric());
  });
  if (!legal) verdict.reasons.push_back(VerdictReason::IllegalMove);
  if (moves.size() > static_cast<std::size_t>(ri.budget)) {
    verdict.reasons.push_back(VerdictReason::LengthExceeded);
  }
  if (legal) {
    bool solved = false;
    if (ri.group) {
      if (!ri.transformation) throw InvalidArgument("group instance carries no transformation");
      // m_k o ... o m_1 o t is the identity.
      const StickerPermutation after = compose(sequence_to_permutation(puzzle, moves), *ri.transformation);
      solved = after.is_identity();
    } else {
      if (!ri.configuration) throw InvalidArgument("instance carries no configuration");
      solved = is_solved(apply_sequence(moves, *ri.configuration));
    }
    if (!solved) verdict.reasons.push_back(VerdictReason::NotSolved);
  }
  verdict.accepted = verdict.reasons.empty();
  return verdict;
}

bool SolutionProfile::row_flipped_odd(int row) const {
  const auto it = row_flips.find(row);
  return it != row_flips.end() && it->second % 2 == 1;
}

SolutionProfile analyze_solution(const ReducedInstance& ri, std::span<const Move> moves) {
  const Puzzle puzzle = ri.puzzle();
  const std::size_t n = ri.source.n();
  const std::size_t m = ri.source.m();
  SolutionProfile profile;
  profile.length = moves.size();

  std::map<int, std::size_t> by_abs_index;
  for (const Move& mv : moves) {
    ++profile.counts[{mv.axis, std::abs(mv.index)}];
    ++by_abs_index[std::abs(mv.index)];
  }

  int window_lo = 0;
  int window_hi = 0;
  if (puzzle.kind() == Kind::Square) {
    for (int row : puzzle.coords()) profile.row_flips[row] = 0;
    std::map<std::size_t, std::size_t> index_row_moves;
    for (const Move& mv : moves) {
      if (mv.axis == Axis::Y) {
        ++profile.row_flips[mv.index];
        ++index_row_moves[static_cast<std::size_t>(std::abs(mv.index))];
      } else {
        ++profile.column_moves;
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      if (index_row_moves[i] == 1) profile.square_one.insert(i);
    }
    window_lo = static_cast<int>(std::max(m, n)) + 1;
    window_hi = static_cast<int>(std::max(m, n) + 2 * n);
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t c = by_abs_index[static_cast<int>(m + i)];
      if (c == 0) profile.zero.insert(i);
      else if (c == 1) profile.one.insert(i);
      else if (c == 2) profile.two.insert(i);
      else profile.more.insert(i);
    }
    const int face = puzzle.half();
    for (const Move& mv : moves) {
      const auto v = static_cast<std::size_t>(std::abs(mv.index));
      if (v > m && v <= m + n) {
        const std::size_t i = v - m;
        if (profile.one.count(i)) ++profile.c_one;
        else if (profile.two.count(i)) ++profile.c_two;
        else ++profile.c_more;
      } else if (v >= 1 && v <= m) {
        ++profile.c_j;
      } else if (static_cast<int>(v) == face && mv.axis != Axis::Z) {
        ++profile.c_vertical;
      } else {
        ++profile.c_other;
      }
    }
    window_lo = static_cast<int>(m + n) + 1;
    window_hi = static_cast<int>(m + 3 * n);
  }
  for (int u = window_lo; u <= window_hi; ++u) {
    if (by_abs_index[u] == 0) {
      profile.unused_index = u;
      break;
    }
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Paired stickers

namespace {

struct PairShape {
  bool q_on_u;
  int q_value;
  int other;
};

std::optional<PairShape> shape(const StickerPos& s, int p, int q) {
  if (std::abs(s.u) == q && std::abs(s.v) == p) return PairShape{true, s.u, s.v};
  if (std::abs(s.v) == q && std::abs(s.u) == p) return PairShape{false, s.v, s.u};
  return std::nullopt;
}

bool paired_in_order(const StickerPos& a, const StickerPos& b, int p1, int p2, int q) {
  if (a.face != b.face) return false;
  const auto sa = shape(a, p1, q);
  const auto sb = shape(b, p2, q);
  if (!sa || !sb) return false;
  return sa->q_on_u == sb->q_on_u && sa->q_value == sb->q_value &&
         (sa->other > 0) == (sb->other > 0);
}

bool moves_sticker(const Puzzle& puzzle, const Move& move, std::uint32_t id) {
  const MoveAction action = move_action(puzzle, move);
  for (const Transfer& t : action.transfers()) {
    if (t.from == id) return t.to != id;
  }
  return false;
}

std::uint32_t destination(const Puzzle& puzzle, const Move& move, std::uint32_t id) {
  const MoveAction action = move_action(puzzle, move);
  for (const Transfer& t : action.transfers()) {
    if (t.from == id) return t.to;
  }
  return id;
}

}  // namespace

bool are_paired(const Puzzle& puzzle, const StickerPos& a, const StickerPos& b, int p1, int p2,
                int q) {
  if (puzzle.kind() != Kind::Cube) return false;
  if (p1 <= 0 || p2 <= 0 || q <= 0 || p1 == p2 || p1 == q || p2 == q) return false;
  const int face = puzzle.half();
  if (p1 >= face || p2 >= face || q >= face) return false;
  return paired_in_order(a, b, p1, p2, q) || paired_in_order(b, a, p1, p2, q);
}

PairTrace track_paired_stickers(const Puzzle& puzzle, const StickerPos& a, const StickerPos& b,
                                int p1, int p2, int q, std::span<const Move> moves) {
  PairTrace trace;
  trace.initially_paired = are_paired(puzzle, a, b, p1, p2, q);
  if (!trace.initially_paired) return trace;
  std::uint32_t ia = puzzle.id(a);
  std::uint32_t ib = puzzle.id(b);
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Move& mv = moves[k];
    const bool exempt = (std::abs(mv.index) == p1 || std::abs(mv.index) == p2) &&
                        (moves_sticker(puzzle, mv, ia) || moves_sticker(puzzle, mv, ib));
    ia = destination(puzzle, mv, ia);
    ib = destination(puzzle, mv, ib);
    if (are_paired(puzzle, puzzle.pos(ia), puzzle.pos(ib), p1, p2, q)) continue;
    if (exempt) {
      trace.released_at = k;
      break;
    }
    trace.violations.push_back(k);
    break;
  }
  return trace;
}

}  // namespace rubikred
