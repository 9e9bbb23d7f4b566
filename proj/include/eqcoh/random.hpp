#pragma once

#include "eqcoh/fixtures.hpp"

#include <cstdint>
#include <random>

namespace eqcoh::random {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`, so that
/// item i draws the same numbers however the run is scheduled.
Rng stream(std::uint64_t seed, std::uint64_t index);

struct InstanceOptions {
    std::size_t max_dim = 6;
    std::size_t max_generators = 3;
    int entry_range = 3; // raw entries drawn from [-entry_range, entry_range]
};

/// Random valid LinearInstance. Built in adapted coordinates U = K ⊕ C,
/// W = pi(U) ⊕ J with block-triangular generators (so ker pi and pi(U) are
/// invariant by construction), then conjugated by random unimodular changes
/// of basis. Mixes generic, kernel-fixing, shear-type and finite-order
/// generators so that every branch of the dimension criterion is exercised.
LinearInstance random_instance(Rng& rng, const InstanceOptions& opts = {});

/// Random multigraph; may contain loops, parallel edges and isolated
/// vertices, and is edgeless when `max_edges` is 0. Edge ids are distinct but
/// not contiguous.
Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

/// Random graph together with 1-2 random vertex permutations, with the edge
/// set closed under the generated group so the action is by automorphisms.
fixtures::GraphFixture random_graph_action(Rng& rng, std::size_t max_vertices);

/// Random rational in [-range, range] with denominator in 1..max_den.
Rat random_rat(Rng& rng, int range, int max_den = 1);
Vec random_combination(Rng& rng, const Subspace& s, int range = 3);

/// Random coefficients and a random potential normalized to 0 at the smallest
/// vertex of each quotient component.
PeriodicDecomposition random_periodic_decomposition(Rng& rng, const PeriodicGraph& pg);

} // namespace eqcoh::random
