#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "rubikred/errors.hpp"
#include "rubikred/hampath.hpp"
#include "rubikred/instances.hpp"

using namespace rubikred;

namespace {

CubicalInstance labels(std::initializer_list<const char*> text) {
  CubicalInstance inst;
  for (const char* t : text) inst.labels.push_back(Bitstring::parse(t));
  return inst;
}

// Every Hamiltonian path as a vertex order, by trying all n! orders.
std::vector<std::vector<std::size_t>> all_paths(const Adjacency& adj) {
  std::vector<std::size_t> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < order.size() && ok; ++k) ok = adj[order[k]][order[k + 1]];
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

bool brute_cycle(const GridGraph& g) {
  Adjacency adj = grid_adjacency(g);
  if (g.size() < 4) return false;
  for (const auto& p : all_paths(adj))
    if (p.front() == 0 && adj[p.back()][0]) return true;
  return false;
}

GridGraph block(int w, int h) {
  std::vector<Point> v;
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < h; ++y) v.push_back({x, y});
  return GridGraph(v);
}

GridGraph ring3() {
  std::vector<Point> v;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 1 || y != 1) v.push_back({x, y});
  return GridGraph(v);
}

}  // namespace

TEST(Grid, ParseExamples) {
  GridGraph sq = parse_grid_graph(R"({"vertices":[[0,0],[1,0],[0,1],[1,1]]})");
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(sq.edge_count(), 4u);
  EXPECT_EQ(parse_grid_graph(R"({"vertices":[[0,0]]})").edge_count(), 0u);
  GridGraph far = parse_grid_graph(R"({"vertices":[[0,0],[2,0]]})");
  EXPECT_EQ(far.size(), 2u);
  EXPECT_EQ(far.edge_count(), 0u);
}

TEST(Grid, ParseErrors) {
  EXPECT_THROW(parse_grid_graph(R"({"vertices":[[0,0],[0,0]]})"), SchemaError);
  EXPECT_THROW(parse_grid_graph(R"({"vertices":[[0,0.5]]})"), SchemaError);
  EXPECT_THROW(parse_grid_graph(R"({"vertices":[[0]]})"), SchemaError);
  EXPECT_THROW(parse_grid_graph(R"({"points":[]})"), SchemaError);
  EXPECT_THROW(parse_grid_graph("not json"), SchemaError);
}

TEST(Gadget, TwoByTwo) {
  PromiseGridInstance out = cycle_to_path(block(2, 2));
  EXPECT_EQ(out.graph.size(), 8u);
  for (Point p : {Point{0, 2}, Point{-1, 2}, Point{1, 2}, Point{1, 3}}) EXPECT_TRUE(out.graph.contains(p));
  EXPECT_EQ(out.s_vertex, (Point{-1, 2}));
  EXPECT_EQ(out.t_vertex, (Point{1, 3}));
  EXPECT_EQ(out.graph.degree(out.s_vertex), 1u);
  EXPECT_EQ(out.graph.degree(out.t_vertex), 1u);
  EXPECT_FALSE(lattice_adjacent(out.s_vertex, out.t_vertex));
}

TEST(Gadget, TwoByThreeHasTwoLeaves) {
  PromiseGridInstance out = cycle_to_path(block(2, 3));
  EXPECT_EQ(out.graph.size(), 10u);
  int leaves = 0;
  for (Point p : out.graph.vertices()) leaves += out.graph.degree(p) == 1;
  EXPECT_EQ(leaves, 2);
}

TEST(Gadget, RingHasPath) {
  PromiseGridInstance out = cycle_to_path(ring3());
  EXPECT_EQ(out.graph.size(), 12u);
  EXPECT_TRUE(find_grid_ham_path(out.graph).has_value());
}

TEST(Gadget, Preconditions) {
  EXPECT_THROW(cycle_to_path(block(2, 1)), InvalidArgument);
  EXPECT_THROW(cycle_to_path(GridGraph{}), InvalidArgument);
}

// Every path of the gadget output runs between the two leaves and exists iff g has a cycle.
TEST(Gadget, EquivalenceOnSmallGraphs) {
  for (unsigned mask = 0; mask < (1u << 6); ++mask) {
    std::vector<Point> v;
    for (int b = 0; b < 6; ++b)
      if (mask >> b & 1) v.push_back({b % 3, b / 3});
    if (v.size() < 2) continue;
    GridGraph g(v);
    bool leaf = false;
    for (Point p : v) leaf |= g.degree(p) <= 1;
    if (leaf) continue;
    PromiseGridInstance out = cycle_to_path(g);
    auto paths = all_paths(grid_adjacency(out.graph));
    EXPECT_EQ(!paths.empty(), brute_cycle(g)) << "mask " << mask;
    std::size_t s = *out.graph.index_of(out.s_vertex), t = *out.graph.index_of(out.t_vertex);
    for (const auto& p : paths) {
      std::pair ends{std::min(p.front(), p.back()), std::max(p.front(), p.back())};
      EXPECT_EQ(ends, std::pair(std::min(s, t), std::max(s, t)));
    }
  }
}

TEST(Cycle, Examples) {
  auto c = find_ham_cycle(block(2, 2));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 4u);
  EXPECT_FALSE(find_ham_cycle(block(1, 3)).has_value());
  auto r = find_ham_cycle(ring3());
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->size(), 8u);
  for (std::size_t k = 0; k < r->size(); ++k)
    EXPECT_TRUE(lattice_adjacent((*r)[k], (*r)[(k + 1) % r->size()]));
}

TEST(Labelling, VerticalPath) {
  PromiseGridInstance inst{block(1, 3), {0, 2}, {0, 0}};
  CubicalInstance c = grid_to_cubical(inst);
  ASSERT_EQ(c.n(), 3u);
  EXPECT_EQ(c.labels[0].str(), "11");
  EXPECT_EQ(c.labels[1].str(), "01");
  EXPECT_EQ(c.labels[2].str(), "00");
}

TEST(Labelling, TwoByTwo) {
  PromiseGridInstance inst{block(2, 2), {0, 1}, {1, 1}};
  CubicalInstance c = grid_to_cubical(inst);
  auto order = labelling_order(inst);
  ASSERT_EQ(c.n(), 4u);
  EXPECT_EQ(c.m(), 2u);
  EXPECT_EQ(order.front(), inst.s_vertex);
  EXPECT_EQ(order.back(), inst.t_vertex);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      EXPECT_EQ(hamming(c.labels[i], c.labels[j]) == 1, lattice_adjacent(order[i], order[j]));
}

TEST(Labelling, AdjacencyPropertyOnRandomGrids) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PromiseGridInstance inst = random_grid_instance(rng, 5, 4, 14);
    CubicalInstance c = grid_to_cubical(inst);
    auto order = labelling_order(inst);
    ASSERT_EQ(order.size(), c.n());
    EXPECT_TRUE(c.labels.back().all_zero());
    EXPECT_TRUE(validate_promise(c, false).structurally_valid());
    for (std::size_t i = 0; i < c.n(); ++i)
      for (std::size_t j = i + 1; j < c.n(); ++j)
        ASSERT_EQ(hamming(c.labels[i], c.labels[j]) == 1, lattice_adjacent(order[i], order[j]));
  }
}

TEST(Labelling, Errors) {
  EXPECT_THROW(grid_to_cubical({block(2, 2), {0, 0}, {0, 0}}), InvalidArgument);
  EXPECT_THROW(grid_to_cubical({block(2, 2), {0, 0}, {5, 5}}), InvalidArgument);
}

TEST(Promise, Examples) {
  auto ok = validate_promise(labels({"1", "0"}), true);
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.endpoints_respected, true);

  auto bad_ends = validate_promise(labels({"01", "10", "00"}), true);
  EXPECT_TRUE(bad_ends.structurally_valid());
  EXPECT_EQ(bad_ends.endpoints_respected, false);
  EXPECT_FALSE(bad_ends.ok());

  auto dup = validate_promise(labels({"11", "11"}), false);
  EXPECT_FALSE(dup.labels_distinct);
  EXPECT_FALSE(dup.last_all_zero);
  EXPECT_FALSE(dup.problems.empty());

  auto ragged = validate_promise(labels({"1", "00"}), false);
  EXPECT_FALSE(ragged.lengths_uniform);
  EXPECT_THROW(require_valid_instance(labels({"11", "11"})), InvalidArgument);
}

TEST(Promise, EndpointCheckMatchesBruteForce) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    CubicalInstance inst = random_cubical_instance(rng, 2 + trial % 6, 3);
    auto paths = all_paths(cubical_adjacency(inst));
    // Paths are listed in both directions; only the endpoint pair matters.
    bool respected = std::ranges::all_of(paths, [&](const auto& p) {
      return std::min(p.front(), p.back()) == 0 && std::max(p.front(), p.back()) == inst.n() - 1;
    });
    EXPECT_EQ(validate_promise(inst, true).endpoints_respected, respected);
  }
}

TEST(FindPath, Examples) {
  auto p = find_ham_path(labels({"011", "110", "111", "100", "000"}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (std::vector<std::size_t>{1, 3, 2, 4, 5}));
  auto q = find_ham_path(labels({"1", "0"}));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (std::vector<std::size_t>{1, 2}));
  EXPECT_FALSE(find_ham_path(labels({"100", "010", "001", "000"})).has_value());
  EXPECT_FALSE(find_ham_path(labels({"11", "00"})).has_value());
}

TEST(FindPath, PromiseViolation) {
  EXPECT_THROW(find_ham_path(labels({"01", "10", "00"})), PromiseViolation);
}

TEST(FindPath, FiveLabelExampleIsAHammingPath) {
  CubicalInstance inst = labels({"011", "110", "111", "100", "000"});
  auto p = *find_ham_path(inst);
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    EXPECT_EQ(hamming(inst.labels[p[k] - 1], inst.labels[p[k + 1] - 1]), 1u);
}

// The DP and the backtracker agree with each other and with the n! oracle.
TEST(FindPath, EnginesAgree) {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 7;
    CubicalInstance inst = random_cubical_instance(rng, n, 3 + trial % 2);
    Adjacency adj = cubical_adjacency(inst);
    auto dp = ham_path_dp(adj, 0, n - 1);
    auto bt = ham_path_backtrack(adj, 0, n - 1, 10'000'000);
    EXPECT_EQ(dp, bt);
    std::optional<std::vector<std::size_t>> least;
    for (const auto& p : all_paths(adj))
      if (p.front() == 0 && p.back() == n - 1) {
        least = p;
        break;
      }
    EXPECT_EQ(dp, least);
    auto ends = ham_path_endpoints(adj);
    std::vector<bool> oracle(n, false);
    for (const auto& p : all_paths(adj)) oracle[p.front()] = oracle[p.back()] = true;
    EXPECT_EQ(ends, oracle);
  }
}

TEST(FindPath, Capacity) {
  CubicalInstance inst = labels({"011", "110", "111", "100", "000"});
  EXPECT_THROW(find_ham_path(inst, HamSearchLimits{.max_vertices = 3}), CapacityError);
}

TEST(Bitstrings, Basics) {
  Bitstring a = Bitstring::parse("0110");
  EXPECT_TRUE(a.bit(2));
  EXPECT_FALSE(a.bit(1));
  EXPECT_EQ((a ^ Bitstring::parse("0100")).str(), "0010");
  EXPECT_EQ(hamming(a, Bitstring::parse("1111")), 2u);
  EXPECT_THROW(Bitstring::parse("01a"), SchemaError);
}
