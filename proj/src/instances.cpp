#include "rubikred/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rubikred/errors.hpp"

namespace rubikred {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool fits(std::size_t n, std::size_t m) { return m >= 63 || n <= (std::size_t{1} << m); }

}  // namespace

CubicalInstance random_cubical_instance(Rng& rng, std::size_t n, std::size_t m) {
  if (n < 1 || m < 1 || !fits(n, m)) throw InvalidArgument("no such instance: n > 2^m");
  std::set<std::string> seen{std::string(m, '0')};
  std::vector<std::string> labels;
  while (labels.size() + 1 < n) {
    std::string s(m, '0');
    for (char& c : s) c = uniform(rng, 0, 1) ? '1' : '0';
    if (seen.insert(s).second) labels.push_back(s);
  }
  labels.push_back(std::string(m, '0'));
  CubicalInstance out;
  for (const auto& s : labels) out.labels.push_back(Bitstring::parse(s));
  return out;
}

YesInstance random_yes_instance(Rng& rng, std::size_t n, std::size_t m) {
  if (n < 1 || m < 1 || !fits(n, m)) throw InvalidArgument("no such instance: n > 2^m");
  std::vector<Bitstring> walk;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw CapacityError("self-avoiding walk kept getting stuck");
    walk.assign(1, Bitstring(m));
    std::set<Bitstring> seen{walk.front()};
    while (walk.size() < n) {
      std::vector<std::size_t> free;
      for (std::size_t j = 1; j <= m; ++j) {
        Bitstring next = walk.back();
        next.set(j, !next.bit(j));
        if (!seen.count(next)) free.push_back(j);
      }
      if (free.empty()) break;
      Bitstring next = walk.back();
      const std::size_t j = free[uniform(rng, 0, free.size() - 1)];
      next.set(j, !next.bit(j));
      seen.insert(next);
      walk.push_back(next);
    }
    if (walk.size() == n) break;
  }
  std::reverse(walk.begin(), walk.end());  // ends at 0^m

  // ordering[p] = label index visited p-th; 1 first, n last.
  std::vector<std::size_t> ordering(n);
  std::iota(ordering.begin(), ordering.end(), std::size_t{1});
  if (n > 2) std::shuffle(ordering.begin() + 1, ordering.end() - 1, rng);

  YesInstance out;
  out.instance.labels.resize(n);
  for (std::size_t p = 0; p < n; ++p) out.instance.labels[ordering[p] - 1] = walk[p];
  out.certificate.ordering = std::move(ordering);
  return out;
}

PromiseGridInstance random_grid_instance(Rng& rng, int w, int h, std::size_t max_vertices) {
  const auto cells = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (w < 1 || h < 1 || cells < 2 || max_vertices < 2) {
    throw InvalidArgument("grid box too small for two vertices");
  }
  std::vector<Point> box;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) box.push_back({x, y});
  }
  std::shuffle(box.begin(), box.end(), rng);
  box.resize(uniform(rng, 2, std::min(max_vertices, cells)));
  const Point s = box[0];
  const Point t = box[1];
  return {GridGraph(std::move(box)), s, t};
}

MoveSequence random_scramble(Rng& rng, Kind kind, int side, Metric metric, std::size_t length) {
  const std::vector<Move> moves = enumerate_moves(kind, side, metric);
  MoveSequence out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(moves[uniform(rng, 0, moves.size() - 1)]);
  return out;
}

}  // namespace rubikred
