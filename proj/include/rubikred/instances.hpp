#pragma once

// Seeded random instance generators for tests, selftest and benchmarks.

#include <random>

#include "rubikred/certificates.hpp"

namespace rubikred {

using Rng = std::mt19937_64;

// n distinct labels of length m with l_n all zero. Needs n <= 2^m.
CubicalInstance random_cubical_instance(Rng& rng, std::size_t n, std::size_t m);

struct YesInstance {
  CubicalInstance instance;
  PathCertificate certificate;
};

// Labels laid along a random self-avoiding hypercube walk that ends at 0^m,
// then numbered so the walk visits l_1 first and l_n last. The certificate
// is that walk; other Hamiltonian paths are not ruled out.
YesInstance random_yes_instance(Rng& rng, std::size_t n, std::size_t m);

// Random vertex subset of a w x h lattice box (between 2 and max_vertices
// vertices) with distinct random s and t.
PromiseGridInstance random_grid_instance(Rng& rng, int w, int h, std::size_t max_vertices);

// A scramble of `length` uniformly random legal moves.
MoveSequence random_scramble(Rng& rng, Kind kind, int side, Metric metric, std::size_t length);

}  // namespace rubikred
