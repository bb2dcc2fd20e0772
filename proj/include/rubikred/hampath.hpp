#pragma once

// Grid graphs, the cycle-to-promise-path gadget, the grid-to-hypercube
// labelling, and exhaustive Hamiltonicity oracles.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rubikred {

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Finite induced subgraph of the square lattice. Vertices are kept sorted by
// (x, y); edges join vertices at unit distance.
class GridGraph {
 public:
  GridGraph() = default;
  // Throws InvalidArgument on duplicate vertices.
  explicit GridGraph(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(Point p) const;
  // Index of p in vertices(), or nullopt.
  std::optional<std::size_t> index_of(Point p) const;
  std::vector<Point> neighbors(Point p) const;
  std::size_t degree(Point p) const { return neighbors(p).size(); }
  std::size_t edge_count() const;

  friend bool operator==(const GridGraph&, const GridGraph&) = default;

 private:
  std::vector<Point> vertices_;
};

bool lattice_adjacent(Point a, Point b);

struct PromiseGridInstance {
  GridGraph graph;
  Point s_vertex;
  Point t_vertex;

  friend bool operator==(const PromiseGridInstance&, const PromiseGridInstance&) = default;
};

// Fixed-length string of bits; bit(1) is the leftmost character.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t length) : bits_(length, false) {}
  // Throws SchemaError on characters other than '0'/'1'.
  static Bitstring parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  // 1-based, as in the reductions.
  bool bit(std::size_t j) const { return bits_.at(j - 1); }
  void set(std::size_t j, bool value) { bits_.at(j - 1) = value; }
  bool all_zero() const;
  std::string str() const;

  friend Bitstring operator^(const Bitstring& a, const Bitstring& b);
  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend auto operator<=>(const Bitstring&, const Bitstring&) = default;

 private:
  std::vector<bool> bits_;
};

std::size_t hamming(const Bitstring& a, const Bitstring& b);

// Ordered labels l_1..l_n. Structural validity (distinct, uniform length,
// l_n all zero) is checked by validate_promise / require_valid_instance.
struct CubicalInstance {
  std::vector<Bitstring> labels;

  std::size_t n() const { return labels.size(); }
  std::size_t m() const { return labels.empty() ? 0 : labels.front().size(); }
  // 1-based label index i, 1-based bit j.
  bool bit(std::size_t i, std::size_t j) const { return labels.at(i - 1).bit(j); }

  static CubicalInstance from_strings(std::span<const std::string_view> labels);

  friend bool operator==(const CubicalInstance&, const CubicalInstance&) = default;
};

struct ValidationReport {
  bool lengths_uniform = true;
  bool labels_distinct = true;
  bool last_all_zero = true;
  bool size_ok = true;  // n >= 1 and m >= 1
  // Set when endpoint checking ran: every Hamiltonian path runs l_1 -> l_n
  // (vacuously true when there is none).
  std::optional<bool> endpoints_respected;
  std::vector<std::string> problems;

  bool structurally_valid() const {
    return lengths_uniform && labels_distinct && last_all_zero && size_ok;
  }
  bool ok() const { return structurally_valid() && endpoints_respected.value_or(true); }
};

// Largest vertex count handled by the bitmask dynamic programme.
inline constexpr std::size_t kMaxDpVertices = 20;

struct HamSearchLimits {
  // Instances above kMaxDpVertices fall back to backtracking, up to this size.
  std::size_t max_vertices = 64;
  std::uint64_t node_limit = 50'000'000;
};

GridGraph parse_grid_graph(std::string_view json_document);

// Adds a = u+(0,1), v = u+(-1,1), b = u'+(0,1), v' = u'+(0,2) around the
// leftmost top-row vertex u and its right neighbour u'; returns (G', v, v').
// v and v' have degree one, so every Hamiltonian path of G' runs v ... v'.
PromiseGridInstance cycle_to_path(const GridGraph& g);

// Interior vertices (positions 2..n-1) are ordered row-major: decreasing y,
// then increasing x.
std::vector<Point> labelling_order(const PromiseGridInstance& inst);
CubicalInstance grid_to_cubical(const PromiseGridInstance& inst);

ValidationReport validate_promise(const CubicalInstance& inst, bool check_endpoints);
// Throws InvalidArgument unless the instance is structurally valid.
void require_valid_instance(const CubicalInstance& inst);

// 1-based ordering i_1..i_n with i_1 = 1, i_n = n, lexicographically least.
// nullopt iff no Hamiltonian path exists. Throws PromiseViolation if paths
// exist but none runs l_1 -> l_n, CapacityError past the limits.
std::optional<std::vector<std::size_t>> find_ham_path(const CubicalInstance& inst,
                                                      const HamSearchLimits& limits = {});

// The two engines behind find_ham_path, exposed for cross-checking. Both
// return the lexicographically least 0-based path from `from` to `to` over
// the adjacency matrix, or nullopt.
using Adjacency = std::vector<std::vector<bool>>;
std::optional<std::vector<std::size_t>> ham_path_dp(const Adjacency& adj, std::size_t from,
                                                    std::size_t to);
std::optional<std::vector<std::size_t>> ham_path_backtrack(const Adjacency& adj, std::size_t from,
                                                           std::size_t to,
                                                           std::uint64_t node_limit);
// Vertices that end at least one Hamiltonian path (any start).
std::vector<bool> ham_path_endpoints(const Adjacency& adj);

Adjacency cubical_adjacency(const CubicalInstance& inst);
Adjacency grid_adjacency(const GridGraph& g);

// Hamiltonian cycle through all vertices, starting at vertices()[0], as a
// vertex list (the closing edge back to the start is implicit).
std::optional<std::vector<Point>> find_ham_cycle(const GridGraph& g,
                                                 const HamSearchLimits& limits = {});
// Any Hamiltonian path in a grid graph (any endpoints).
std::optional<std::vector<Point>> find_grid_ham_path(const GridGraph& g,
                                                     const HamSearchLimits& limits = {});

}  // namespace rubikred
