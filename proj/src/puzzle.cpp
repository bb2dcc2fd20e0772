#include "rubikred/puzzle.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "rubikred/errors.hpp"

namespace rubikred {

namespace {

struct Vec3 {
  int x = 0;
  int y = 0;
  int z = 0;

  int& operator[](Axis a) { return a == Axis::X ? x : (a == Axis::Y ? y : z); }
  int operator[](Axis a) const { return a == Axis::X ? x : (a == Axis::Y ? y : z); }
};

// One clockwise quarter turn about `axis`, viewed from its positive end.
Vec3 rotate_cw(const Vec3& p, Axis axis) {
  switch (axis) {
    case Axis::X:
      return {p.x, p.z, -p.y};
    case Axis::Y:
      return {-p.z, p.y, p.x};
    case Axis::Z:
      return {p.y, -p.x, p.z};
  }
  return p;
}

int quarter_turns(Rotation r) {
  switch (r) {
    case Rotation::Cw:
      return 1;
    case Rotation::Ccw:
      return 3;
    case Rotation::Half:
      return 2;
  }
  return 0;
}

Face face_of_normal(const Vec3& n) {
  if (n.x == 1) return Face::PosX;
  if (n.x == -1) return Face::NegX;
  if (n.y == 1) return Face::PosY;
  if (n.y == -1) return Face::NegY;
  if (n.z == 1) return Face::PosZ;
  return Face::NegZ;
}

Vec3 normal_of(Face f) {
  const int sgn = is_positive(f) ? 1 : -1;
  Vec3 n;
  n[normal_axis(f)] = sgn;
  return n;
}

// In-face axes (u, v) of a face; Square side faces have no v axis.
std::pair<Axis, std::optional<Axis>> face_axes(Kind kind, Face f) {
  switch (normal_axis(f)) {
    case Axis::X:
      return {Axis::Y, kind == Kind::Cube ? std::optional<Axis>(Axis::Z) : std::nullopt};
    case Axis::Y:
      return {Axis::X, kind == Kind::Cube ? std::optional<Axis>(Axis::Z) : std::nullopt};
    case Axis::Z:
      return {Axis::X, Axis::Y};
  }
  return {Axis::X, Axis::Y};
}

struct Sticker3 {
  Vec3 cubie;
  Vec3 normal;
};

Sticker3 to_3d(const Puzzle& puzzle, const StickerPos& pos) {
  const Face f = pos.face;
  const Vec3 n = normal_of(f);
  Vec3 c;
  const auto [ua, va] = face_axes(puzzle.kind(), f);
  c[ua] = pos.u;
  if (va) c[*va] = pos.v;
  const Axis na = normal_axis(f);
  // Square cubies live in the single layer z = 0; their top and bottom
  // stickers share a cubie.
  if (!(puzzle.kind() == Kind::Square && na == Axis::Z)) {
    c[na] = is_positive(f) ? puzzle.half() : -puzzle.half();
  }
  return {c, n};
}

StickerPos from_3d(const Puzzle& puzzle, const Sticker3& s) {
  const Face f = face_of_normal(s.normal);
  const auto [ua, va] = face_axes(puzzle.kind(), f);
  return {f, s.cubie[ua], va ? s.cubie[*va] : 0};
}

void require_valid(const Puzzle& puzzle, const Move& move) {
  if (!is_valid_move(puzzle, move)) {
    throw InvalidArgument("move " + format_move(move) + " is not valid for a side-" +
                          std::to_string(puzzle.side()) + " " +
                          std::string(to_string(puzzle.kind())));
  }
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::Square ? "square" : "cube"; }

std::string_view to_string(Face face) {
  static constexpr std::array<std::string_view, 6> names = {"+x", "-x", "+y", "-y", "+z", "-z"};
  return names[static_cast<std::size_t>(face)];
}

std::string_view to_string(Axis axis) {
  static constexpr std::array<std::string_view, 3> names = {"x", "y", "z"};
  return names[static_cast<std::size_t>(axis)];
}

std::string_view to_string(Rotation rotation) {
  static constexpr std::array<std::string_view, 3> names = {"cw", "ccw", "half"};
  return names[static_cast<std::size_t>(rotation)];
}

std::string_view to_string(Metric metric) {
  static constexpr std::array<std::string_view, 3> names = {"square", "stm", "sqtm"};
  return names[static_cast<std::size_t>(metric)];
}

char to_char(Color color) {
  static constexpr std::array<char, 6> chars = {'R', 'B', 'G', 'W', 'Y', 'O'};
  return chars[static_cast<std::size_t>(color)];
}

Kind kind_from_string(std::string_view text) {
  if (text == "square") return Kind::Square;
  if (text == "cube") return Kind::Cube;
  throw SchemaError("unknown puzzle kind '" + std::string(text) + "'");
}

Face face_from_string(std::string_view text) {
  for (Face f : kAllFaces) {
    if (to_string(f) == text) return f;
  }
  throw SchemaError("unknown face '" + std::string(text) + "'");
}

Color color_from_char(char c) {
  switch (c) {
    case 'R':
      return Color::R;
    case 'B':
      return Color::B;
    case 'G':
      return Color::G;
    case 'W':
      return Color::W;
    case 'Y':
      return Color::Y;
    case 'O':
      return Color::O;
    default:
      throw SchemaError(std::string("unknown colour code '") + c + "'");
  }
}

Axis normal_axis(Face face) { return static_cast<Axis>(static_cast<int>(face) / 2); }

bool is_positive(Face face) { return static_cast<int>(face) % 2 == 0; }

// ---------------------------------------------------------------------------
// Puzzle

Puzzle::Puzzle(Kind kind, int side) : kind_(kind), side_(side) {
  if (side < 2) throw InvalidArgument("puzzle side must be at least 2, got " + std::to_string(side));
}

bool Puzzle::is_valid_coord(int c) const {
  const int a = half();
  if (c < -a || c > a) return false;
  return c != 0 || side_ % 2 == 1;
}

std::size_t Puzzle::coord_index(int c) const {
  if (!is_valid_coord(c)) {
    throw InvalidArgument("coordinate " + std::to_string(c) + " invalid for side " +
                          std::to_string(side_));
  }
  const int a = half();
  if (side_ % 2 == 1 || c < 0) return static_cast<std::size_t>(c + a);
  return static_cast<std::size_t>(c + a - 1);
}

int Puzzle::coord_at(std::size_t index) const {
  const int k = static_cast<int>(index);
  const int a = half();
  if (side_ % 2 == 1 || k < a) return k - a;
  return k - a + 1;
}

std::vector<int> Puzzle::coords() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(side_));
  for (std::size_t k = 0; k < static_cast<std::size_t>(side_); ++k) out.push_back(coord_at(k));
  return out;
}

std::size_t Puzzle::sticker_count() const {
  const auto s = static_cast<std::size_t>(side_);
  return kind_ == Kind::Cube ? 6 * s * s : 2 * s * s + 4 * s;
}

std::size_t Puzzle::face_rows(Face) const { return static_cast<std::size_t>(side_); }

std::size_t Puzzle::face_cols(Face face) const {
  if (kind_ == Kind::Square && normal_axis(face) != Axis::Z) return 1;
  return static_cast<std::size_t>(side_);
}

std::size_t Puzzle::face_offset(Face face) const {
  const auto s = static_cast<std::size_t>(side_);
  const auto f = static_cast<std::size_t>(face);
  if (kind_ == Kind::Cube) return f * s * s;
  if (f < 4) return f * s;
  return 4 * s + (f - 4) * s * s;
}

std::uint32_t Puzzle::id(const StickerPos& pos) const {
  const std::size_t ui = coord_index(pos.u);
  std::size_t vi = 0;
  if (face_cols(pos.face) == 1) {
    if (pos.v != 0) throw InvalidArgument("square side stickers carry v = 0");
  } else {
    vi = coord_index(pos.v);
  }
  return static_cast<std::uint32_t>(face_offset(pos.face) + ui * face_cols(pos.face) + vi);
}

StickerPos Puzzle::pos(std::uint32_t id) const {
  if (id >= sticker_count()) throw InvalidArgument("sticker id out of range");
  Face face = Face::PosX;
  for (Face f : kAllFaces) {
    if (face_offset(f) <= id) face = f;
  }
  const std::size_t local = id - face_offset(face);
  const std::size_t cols = face_cols(face);
  const int u = coord_at(local / cols);
  const int v = cols == 1 ? 0 : coord_at(local % cols);
  return {face, u, v};
}

// ---------------------------------------------------------------------------
// StickerPermutation / PuzzleConfig

StickerPermutation StickerPermutation::identity(const Puzzle& puzzle) {
  std::vector<std::uint32_t> map(puzzle.sticker_count());
  for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = i;
  return StickerPermutation(puzzle, std::move(map), true);
}

StickerPermutation::StickerPermutation(const Puzzle& puzzle, std::vector<std::uint32_t> map)
    : puzzle_(puzzle), map_(std::move(map)) {
  if (map_.size() != puzzle_.sticker_count()) {
    throw InvalidArgument("permutation size does not match the puzzle");
  }
  std::vector<bool> hit(map_.size(), false);
  for (std::uint32_t j : map_) {
    if (j >= map_.size() || hit[j]) throw InvalidArgument("mapping is not a bijection");
    hit[j] = true;
  }
}

bool StickerPermutation::is_identity() const {
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

std::vector<std::uint32_t> StickerPermutation::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) out.push_back(i);
  }
  return out;
}

PuzzleConfig::PuzzleConfig(const Puzzle& puzzle, std::vector<Color> colors)
    : puzzle_(puzzle), colors_(std::move(colors)) {
  if (colors_.size() != puzzle_.sticker_count()) {
    throw InvalidArgument("colour count does not match the puzzle");
  }
}

Color solved_color(Kind kind, Face face) {
  if (kind == Kind::Cube) {
    static constexpr std::array<Color, 6> cube = {Color::O, Color::R, Color::G,
                                                  Color::Y, Color::W, Color::B};
    return cube[static_cast<std::size_t>(face)];
  }
  static constexpr std::array<Color, 6> square = {Color::O, Color::W, Color::G,
                                                  Color::Y, Color::R, Color::B};
  return square[static_cast<std::size_t>(face)];
}

PuzzleConfig make_solved(Kind kind, int side) {
  const Puzzle puzzle(kind, side);
  std::vector<Color> colors(puzzle.sticker_count());
  for (Face f : kAllFaces) {
    const std::size_t begin = puzzle.face_offset(f);
    const std::size_t count = puzzle.face_rows(f) * puzzle.face_cols(f);
    std::fill_n(colors.begin() + static_cast<std::ptrdiff_t>(begin), count, solved_color(kind, f));
  }
  return PuzzleConfig(puzzle, std::move(colors));
}

// ---------------------------------------------------------------------------
// Moves

bool metric_fits(Kind kind, Metric metric) {
  return (kind == Kind::Square) == (metric == Metric::SquareFlip);
}

std::vector<Move> enumerate_moves(Kind kind, int side, Metric metric) {
  if (!metric_fits(kind, metric)) {
    throw InvalidArgument("metric " + std::string(to_string(metric)) + " does not apply to a " +
                          std::string(to_string(kind)));
  }
  const Puzzle puzzle(kind, side);
  std::vector<Move> moves;
  if (kind == Kind::Square) {
    for (Axis axis : {Axis::X, Axis::Y}) {
      for (int c : puzzle.coords()) moves.push_back({axis, c, std::nullopt});
    }
    return moves;
  }
  std::vector<Rotation> rotations = {Rotation::Cw, Rotation::Ccw};
  if (metric == Metric::Stm) rotations.push_back(Rotation::Half);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    for (int c : puzzle.coords()) {
      for (Rotation r : rotations) moves.push_back({axis, c, r});
    }
  }
  return moves;
}

bool is_valid_move(const Puzzle& puzzle, const Move& move) {
  if (!puzzle.is_valid_coord(move.index)) return false;
  if (puzzle.kind() == Kind::Square) return move.axis != Axis::Z && !move.rotation;
  return move.rotation.has_value();
}

bool is_legal_move(const Puzzle& puzzle, const Move& move, Metric metric) {
  if (!metric_fits(puzzle.kind(), metric) || !is_valid_move(puzzle, move)) return false;
  return !(metric == Metric::Sqtm && move.rotation == Rotation::Half);
}

Move inverse_move(const Move& move) {
  Move inv = move;
  if (move.rotation == Rotation::Cw) inv.rotation = Rotation::Ccw;
  else if (move.rotation == Rotation::Ccw) inv.rotation = Rotation::Cw;
  return inv;
}

bool same_slice(const Move& a, const Move& b) { return a.axis == b.axis && a.index == b.index; }

MoveAction move_action(const Puzzle& puzzle, const Move& move) {
  require_valid(puzzle, move);
  const int turns = move.rotation ? quarter_turns(*move.rotation) : 2;
  const std::vector<int> coords = puzzle.coords();
  std::vector<StickerPos> slice;
  for (Face f : kAllFaces) {
    const auto [ua, va] = face_axes(puzzle.kind(), f);
    if (normal_axis(f) == move.axis) {
      const int face_index = is_positive(f) ? puzzle.half() : -puzzle.half();
      if (move.index != face_index) continue;
      for (int u : coords) {
        if (!va) {
          slice.push_back({f, u, 0});
          continue;
        }
        for (int v : coords) slice.push_back({f, u, v});
      }
    } else if (ua == move.axis) {
      if (!va) {
        slice.push_back({f, move.index, 0});
        continue;
      }
      for (int v : coords) slice.push_back({f, move.index, v});
    } else if (va && *va == move.axis) {
      for (int u : coords) slice.push_back({f, u, move.index});
    }
  }
  std::vector<Transfer> transfers;
  transfers.reserve(slice.size());
  for (const StickerPos& p : slice) {
    Sticker3 s = to_3d(puzzle, p);
    for (int t = 0; t < turns; ++t) {
      s.cubie = rotate_cw(s.cubie, move.axis);
      s.normal = rotate_cw(s.normal, move.axis);
    }
    transfers.push_back({puzzle.id(p), puzzle.id(from_3d(puzzle, s))});
  }
  return MoveAction(std::move(transfers));
}

StickerPermutation move_to_permutation(const Move& move, Kind kind, int side) {
  const Puzzle puzzle(kind, side);
  std::vector<std::uint32_t> map(puzzle.sticker_count());
  for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = i;
  const MoveAction action = move_action(puzzle, move);
  for (const Transfer& t : action.transfers()) map[t.from] = t.to;
  return StickerPermutation(puzzle, std::move(map));
}

StickerPermutation compose(const StickerPermutation& p, const StickerPermutation& q) {
  if (!(p.puzzle() == q.puzzle())) throw InvalidArgument("compose: mismatched puzzle dimensions");
  std::vector<std::uint32_t> map(q.map_.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = p.map_[q.map_[i]];
  return StickerPermutation(p.puzzle(), std::move(map), true);
}

StickerPermutation invert(const StickerPermutation& p) {
  std::vector<std::uint32_t> map(p.map_.size());
  for (std::uint32_t i = 0; i < map.size(); ++i) map[p.map_[i]] = i;
  return StickerPermutation(p.puzzle(), std::move(map), true);
}

StickerPermutation sequence_to_permutation(const Puzzle& puzzle, std::span<const Move> moves) {
  // labels[pos] = id of the sticker currently at pos.
  std::vector<std::uint32_t> labels(puzzle.sticker_count());
  for (std::uint32_t i = 0; i < labels.size(); ++i) labels[i] = i;
  std::vector<std::uint32_t> scratch;
  for (const Move& m : moves) move_action(puzzle, m).apply(std::span<std::uint32_t>(labels), scratch);
  std::vector<std::uint32_t> map(labels.size());
  for (std::uint32_t pos = 0; pos < labels.size(); ++pos) map[labels[pos]] = pos;
  return StickerPermutation(puzzle, std::move(map), true);
}

PuzzleConfig apply_permutation(const StickerPermutation& p, const PuzzleConfig& config) {
  if (!(p.puzzle() == config.puzzle())) {
    throw InvalidArgument("apply_permutation: mismatched puzzle dimensions");
  }
  std::vector<Color> out(config.colors().size());
  const auto in = config.colors();
  for (std::uint32_t i = 0; i < out.size(); ++i) out[p(i)] = in[i];
  return PuzzleConfig(config.puzzle(), std::move(out));
}

PuzzleConfig apply_sequence(std::span<const Move> moves, const PuzzleConfig& config) {
  PuzzleConfig out = config;
  std::vector<Color> scratch;
  for (const Move& m : moves) move_action(config.puzzle(), m).apply(out.colors(), scratch);
  return out;
}

bool is_solved(const PuzzleConfig& config) {
  const Puzzle& puzzle = config.puzzle();
  const auto colors = config.colors();
  std::set<Color> seen;
  for (Face f : kAllFaces) {
    const std::size_t begin = puzzle.face_offset(f);
    const std::size_t count = puzzle.face_rows(f) * puzzle.face_cols(f);
    const Color c = colors[begin];
    for (std::size_t k = 1; k < count; ++k) {
      if (colors[begin + k] != c) return false;
    }
    if (!seen.insert(c).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tokens

Move parse_move(std::string_view token, Kind kind, int side) {
  const Puzzle puzzle(kind, side);
  auto fail = [&](const std::string& why) -> SchemaError {
    return SchemaError("bad move token '" + std::string(token) + "': " + why);
  };

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = token.find(':', start);
    parts.push_back(token.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const std::size_t expected = kind == Kind::Square ? 2 : 3;
  if (parts.size() != expected) throw fail("expected " + std::to_string(expected) + " fields");

  Move move;
  if (parts[0] == "x") move.axis = Axis::X;
  else if (parts[0] == "y") move.axis = Axis::Y;
  else if (parts[0] == "z" && kind == Kind::Cube) move.axis = Axis::Z;
  else throw fail("unknown axis");

  std::string_view digits = parts[1];
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw fail("index is not a decimal integer");
  }
  if (digits.size() > 1 && digits.front() == '0') throw fail("leading zero in index");
  if (negative && digits == "0") throw fail("negative zero");
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail("index out of range");
  move.index = negative ? -value : value;
  if (!puzzle.is_valid_coord(move.index)) throw fail("index not a coordinate of this puzzle");

  if (kind == Kind::Cube) {
    if (parts[2] == "cw") move.rotation = Rotation::Cw;
    else if (parts[2] == "ccw") move.rotation = Rotation::Ccw;
    else if (parts[2] == "half") move.rotation = Rotation::Half;
    else throw fail("unknown rotation");
  }
  return move;
}

std::string format_move(const Move& move) {
  std::string out(to_string(move.axis));
  out += ':';
  out += std::to_string(move.index);
  if (move.rotation) {
    out += ':';
    out += to_string(*move.rotation);
  }
  return out;
}

MoveSequence parse_sequence(std::string_view text, Kind kind, int side) {
  const auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  MoveSequence moves;
  if (text.empty()) return moves;
  std::size_t start = 0;
  while (true) {
    const std::size_t space = text.find(' ', start);
    const std::string_view token =
        text.substr(start, space == std::string_view::npos ? space : space - start);
    moves.push_back(parse_move(token, kind, side));
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return moves;
}

std::string format_sequence(std::span<const Move> moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += format_move(m);
  }
  return out;
}

}  // namespace rubikred
