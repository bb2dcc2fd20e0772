#include "rubikred/hampath.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "rubikred/errors.hpp"

namespace rubikred {

// ---------------------------------------------------------------------------
// GridGraph

GridGraph::GridGraph(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidArgument("grid graph has duplicate vertices");
  }
}

bool GridGraph::contains(Point p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

std::optional<std::size_t> GridGraph::index_of(Point p) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Point> GridGraph::neighbors(Point p) const {
  std::vector<Point> out;
  for (Point q : {Point{p.x - 1, p.y}, Point{p.x, p.y - 1}, Point{p.x, p.y + 1},
                  Point{p.x + 1, p.y}}) {
    if (contains(q)) out.push_back(q);
  }
  return out;
}

std::size_t GridGraph::edge_count() const {
  std::size_t twice = 0;
  for (Point p : vertices_) twice += degree(p);
  return twice / 2;
}

bool lattice_adjacent(Point a, Point b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy == 1;
}

GridGraph parse_grid_graph(std::string_view json_document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_document);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("grid graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw SchemaError("grid graph: expected {\"vertices\": [[x,y], ...]}");
  }
  std::vector<Point> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw SchemaError("grid graph: vertices must be integer pairs");
    }
    vertices.push_back({v[0].get<int>(), v[1].get<int>()});
  }
  try {
    return GridGraph(std::move(vertices));
  } catch (const InvalidArgument& e) {
    throw SchemaError(std::string("grid graph: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Bitstring / CubicalInstance

Bitstring Bitstring::parse(std::string_view text) {
  Bitstring out(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '0' && text[k] != '1') {
      throw SchemaError("label '" + std::string(text) + "' contains characters other than 0/1");
    }
    out.bits_[k] = text[k] == '1';
  }
  return out;
}

bool Bitstring::all_zero() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

std::string Bitstring::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

Bitstring operator^(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) throw InvalidArgument("xor of bitstrings of different length");
  Bitstring out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.bits_[k] = a.bits_[k] != b.bits_[k];
  return out;
}

std::size_t hamming(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) return std::numeric_limits<std::size_t>::max();
  std::size_t d = 0;
  for (std::size_t j = 1; j <= a.size(); ++j) d += a.bit(j) != b.bit(j);
  return d;
}

CubicalInstance CubicalInstance::from_strings(std::span<const std::string_view> labels) {
  CubicalInstance inst;
  for (std::string_view s : labels) inst.labels.push_back(Bitstring::parse(s));
  return inst;
}

// ---------------------------------------------------------------------------
// Gadget and labelling

PromiseGridInstance cycle_to_path(const GridGraph& g) {
  if (g.size() == 0) throw InvalidArgument("cycle_to_path: empty graph");
  for (Point p : g.vertices()) {
    if (g.degree(p) == 1) {
      throw InvalidArgument("cycle_to_path: vertex (" + std::to_string(p.x) + "," +
                            std::to_string(p.y) + ") has degree 1");
    }
  }
  const auto verts = g.vertices();
  const int top = std::max_element(verts.begin(), verts.end(), [](Point a, Point b) {
                    return a.y < b.y;
                  })->y;
  Point u{std::numeric_limits<int>::max(), top};
  for (Point p : verts) {
    if (p.y == top && p.x < u.x) u.x = p.x;
  }
  const Point u2{u.x + 1, u.y};
  if (!g.contains(u2)) throw InvalidArgument("cycle_to_path: top-left vertex has no right neighbour");

  std::vector<Point> extended(verts.begin(), verts.end());
  // v sits up-left of u so that v and v' are not lattice neighbours; nothing
  // of g lies left of u in the top row, so v touches only a.
  const Point a{u.x, u.y + 1};
  const Point v{u.x - 1, u.y + 1};
  const Point b{u2.x, u2.y + 1};
  const Point v2{u2.x, u2.y + 2};
  extended.insert(extended.end(), {a, v, b, v2});
  return {GridGraph(std::move(extended)), v, v2};
}

std::vector<Point> labelling_order(const PromiseGridInstance& inst) {
  const GridGraph& g = inst.graph;
  if (inst.s_vertex == inst.t_vertex) throw InvalidArgument("s and t must be distinct");
  if (!g.contains(inst.s_vertex) || !g.contains(inst.t_vertex)) {
    throw InvalidArgument("s and t must be vertices of the graph");
  }
  std::vector<Point> interior;
  for (Point p : g.vertices()) {
    if (p != inst.s_vertex && p != inst.t_vertex) interior.push_back(p);
  }
  std::sort(interior.begin(), interior.end(), [](Point a, Point b) {
    return a.y != b.y ? a.y > b.y : a.x < b.x;
  });
  std::vector<Point> order;
  order.reserve(g.size());
  order.push_back(inst.s_vertex);
  order.insert(order.end(), interior.begin(), interior.end());
  order.push_back(inst.t_vertex);
  return order;
}

CubicalInstance grid_to_cubical(const PromiseGridInstance& inst) {
  const std::vector<Point> order = labelling_order(inst);
  int min_x = order.front().x, max_x = min_x, min_y = order.front().y, max_y = min_y;
  for (Point p : order) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const auto row_bits = static_cast<std::size_t>(max_y - min_y);  // m_r - 1
  const auto col_bits = static_cast<std::size_t>(max_x - min_x);  // m_c - 1

  // Row k from the top gets k leading ones; column k from the left likewise.
  auto raw_label = [&](Point p) {
    Bitstring label(row_bits + col_bits);
    const auto row_rank = static_cast<std::size_t>(max_y - p.y);
    const auto col_rank = static_cast<std::size_t>(p.x - min_x);
    for (std::size_t j = 1; j <= row_rank; ++j) label.set(j, true);
    for (std::size_t j = 1; j <= col_rank; ++j) label.set(row_bits + j, true);
    return label;
  };

  const Bitstring last = raw_label(order.back());
  CubicalInstance out;
  out.labels.reserve(order.size());
  for (Point p : order) out.labels.push_back(raw_label(p) ^ last);
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian search engines

namespace {

std::vector<std::uint32_t> adjacency_masks(const Adjacency& adj) {
  std::vector<std::uint32_t> masks(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (adj[v][u]) masks[v] |= 1u << u;
    }
  }
  return masks;
}

class Backtracker {
 public:
  Backtracker(const Adjacency& adj, std::uint64_t node_limit)
      : adj_(adj), node_limit_(node_limit), visited_(adj.size(), false) {}

  // Lexicographically least Hamiltonian path from `from`, ending at `to`
  // when given.
  std::optional<std::vector<std::size_t>> run(std::size_t from, std::optional<std::size_t> to) {
    to_ = to;
    path_.assign(1, from);
    std::fill(visited_.begin(), visited_.end(), false);
    visited_[from] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    if (++nodes_ > node_limit_) throw CapacityError("Hamiltonian backtracking exceeded its node limit");
    const std::size_t cur = path_.back();
    if (path_.size() == adj_.size()) return !to_ || cur == *to_;
    if (to_ && cur == *to_) return false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (visited_[u] || !adj_[cur][u]) continue;
      visited_[u] = true;
      path_.push_back(u);
      if (extend()) return true;
      path_.pop_back();
      visited_[u] = false;
    }
    return false;
  }

  const Adjacency& adj_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::optional<std::size_t> to_;
  std::vector<bool> visited_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::optional<std::vector<std::size_t>> ham_path_dp(const Adjacency& adj, std::size_t from,
                                                    std::size_t to) {
  const std::size_t n = adj.size();
  if (n > kMaxDpVertices) throw CapacityError("bitmask DP limited to 20 vertices");
  if (from >= n || to >= n) throw InvalidArgument("endpoint out of range");
  if (n == 1) return std::vector<std::size_t>{from};
  if (from == to) return std::nullopt;

  const std::vector<std::uint32_t> nbr = adjacency_masks(adj);
  // reach[mask] holds v when some path starts at v, visits exactly mask and
  // ends at `to`.
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  const std::uint32_t to_bit = 1u << to;
  reach[to_bit] = to_bit;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!(mask & to_bit) || mask == to_bit) continue;
    std::uint32_t rest = mask & ~to_bit;
    std::uint32_t result = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (nbr[v] & reach[mask ^ (1u << v)]) result |= 1u << v;
    }
    reach[mask] = result;
  }
  if (!(reach[full] & (1u << from))) return std::nullopt;

  std::vector<std::size_t> path{from};
  std::uint32_t mask = full;
  std::size_t cur = from;
  while (path.size() < n) {
    mask ^= 1u << cur;
    const std::uint32_t options = nbr[cur] & reach[mask];
    cur = static_cast<std::size_t>(std::countr_zero(options));
    path.push_back(cur);
  }
  return path;
}

std::optional<std::vector<std::size_t>> ham_path_backtrack(const Adjacency& adj, std::size_t from,
                                                           std::size_t to,
                                                           std::uint64_t node_limit) {
  if (from >= adj.size() || to >= adj.size()) throw InvalidArgument("endpoint out of range");
  if (adj.size() > 1 && from == to) return std::nullopt;
  return Backtracker(adj, node_limit).run(from, to);
}

std::vector<bool> ham_path_endpoints(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n > kMaxDpVertices) throw CapacityError("bitmask DP limited to 20 vertices");
  std::vector<bool> out(n, false);
  if (n == 0) return out;
  const std::vector<std::uint32_t> nbr = adjacency_masks(adj);
  const std::uint32_t full = (1u << n) - 1;
  // ends[mask] holds v when some path visits exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::has_single_bit(mask)) {
      ends[mask] = mask;
      continue;
    }
    std::uint32_t rest = mask;
    std::uint32_t result = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (nbr[v] & ends[mask ^ (1u << v)]) result |= 1u << v;
    }
    ends[mask] = result;
  }
  for (std::size_t v = 0; v < n; ++v) out[v] = (ends[full] >> v) & 1u;
  return out;
}

Adjacency cubical_adjacency(const CubicalInstance& inst) {
  const std::size_t n = inst.n();
  Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      adj[a][b] = a != b && hamming(inst.labels[a], inst.labels[b]) == 1;
    }
  }
  return adj;
}

Adjacency grid_adjacency(const GridGraph& g) {
  const auto verts = g.vertices();
  Adjacency adj(verts.size(), std::vector<bool>(verts.size(), false));
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = 0; b < verts.size(); ++b) adj[a][b] = lattice_adjacent(verts[a], verts[b]);
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Promise checks and oracles

ValidationReport validate_promise(const CubicalInstance& inst, bool check_endpoints) {
  ValidationReport report;
  if (inst.n() == 0 || inst.m() == 0) {
    report.size_ok = false;
    report.problems.push_back("need n >= 1 labels of length m >= 1");
  }
  for (const Bitstring& l : inst.labels) {
    if (l.size() != inst.m()) {
      report.lengths_uniform = false;
      report.problems.push_back("labels have differing lengths");
      break;
    }
  }
  std::set<Bitstring> seen(inst.labels.begin(), inst.labels.end());
  if (seen.size() != inst.labels.size()) {
    report.labels_distinct = false;
    report.problems.push_back("labels are not distinct");
  }
  if (inst.n() > 0 && !inst.labels.back().all_zero()) {
    report.last_all_zero = false;
    report.problems.push_back("last label is not all zeros");
  }
  if (check_endpoints && report.structurally_valid()) {
    if (inst.n() <= kMaxDpVertices) {
      const std::vector<bool> ends = ham_path_endpoints(cubical_adjacency(inst));
      bool respected = true;
      for (std::size_t v = 1; v + 1 < inst.n(); ++v) respected = respected && !ends[v];
      report.endpoints_respected = respected;
      if (!respected) report.problems.push_back("a Hamiltonian path has an endpoint other than l_1, l_n");
    } else {
      report.problems.push_back("endpoint promise not checked: n exceeds the exhaustive bound");
    }
  }
  return report;
}

void require_valid_instance(const CubicalInstance& inst) {
  const ValidationReport report = validate_promise(inst, false);
  if (!report.structurally_valid()) {
    std::string why;
    for (const std::string& p : report.problems) why += (why.empty() ? "" : "; ") + p;
    throw InvalidArgument("invalid cubical instance: " + why);
  }
}

std::optional<std::vector<std::size_t>> find_ham_path(const CubicalInstance& inst,
                                                      const HamSearchLimits& limits) {
  require_valid_instance(inst);
  const std::size_t n = inst.n();
  if (n > limits.max_vertices) {
    throw CapacityError("find_ham_path: n = " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(limits.max_vertices));
  }
  const Adjacency adj = cubical_adjacency(inst);
  std::optional<std::vector<std::size_t>> path =
      n <= kMaxDpVertices ? ham_path_dp(adj, 0, n - 1)
                          : ham_path_backtrack(adj, 0, n - 1, limits.node_limit);
  if (path) {
    for (std::size_t& v : *path) ++v;
    return path;
  }
  bool any = false;
  if (n <= kMaxDpVertices) {
    const std::vector<bool> ends = ham_path_endpoints(adj);
    any = std::find(ends.begin(), ends.end(), true) != ends.end();
  } else {
    Backtracker bt(adj, limits.node_limit);
    for (std::size_t s = 0; s < n && !any; ++s) any = bt.run(s, std::nullopt).has_value();
  }
  if (any) throw PromiseViolation("Hamiltonian paths exist but none runs from l_1 to l_n");
  return std::nullopt;
}

std::optional<std::vector<Point>> find_ham_cycle(const GridGraph& g, const HamSearchLimits& limits) {
  const std::size_t n = g.size();
  if (n > limits.max_vertices) {
    throw CapacityError("find_ham_cycle: " + std::to_string(n) + " vertices exceed the bound");
  }
  if (n < 3) return std::nullopt;
  const Adjacency adj = grid_adjacency(g);
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t w = 1; w < n; ++w) {
    if (!adj[0][w]) continue;
    auto path = n <= kMaxDpVertices ? ham_path_dp(adj, 0, w)
                                    : ham_path_backtrack(adj, 0, w, limits.node_limit);
    if (path && (!best || *path < *best)) best = std::move(path);
  }
  if (!best) return std::nullopt;
  std::vector<Point> cycle;
  for (std::size_t v : *best) cycle.push_back(g.vertices()[v]);
  return cycle;
}

std::optional<std::vector<Point>> find_grid_ham_path(const GridGraph& g,
                                                     const HamSearchLimits& limits) {
  const std::size_t n = g.size();
  if (n > std::min(limits.max_vertices, kMaxDpVertices)) {
    throw CapacityError("find_grid_ham_path: " + std::to_string(n) + " vertices exceed the bound");
  }
  if (n == 0) return std::nullopt;
  const Adjacency adj = grid_adjacency(g);
  const std::vector<bool> ends = ham_path_endpoints(adj);
  for (std::size_t s = 0; s < n; ++s) {
    if (!ends[s]) continue;
    if (n == 1) return std::vector<Point>{g.vertices()[0]};
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || !ends[t]) continue;
      if (auto path = ham_path_dp(adj, s, t)) {
        std::vector<Point> out;
        for (std::size_t v : *path) out.push_back(g.vertices()[v]);
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rubikred
