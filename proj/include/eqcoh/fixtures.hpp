#pragma once

#include "eqcoh/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqcoh::fixtures {

struct GraphFixture {
    Graph graph;
    GraphAction action;
};

struct PeriodicFixture {
    PeriodicGraph graph;
    Cochain1 w;
};

// Abstract instances.
LinearInstance shear();
LinearInstance double_shear();
LinearInstance identity_action();

// Finite graphs with permutation actions.
GraphFixture cycle_rotation(std::size_t n);
GraphFixture path2_swap();
GraphFixture path3_reflection();
GraphFixture triangle_s3();
GraphFixture two_triangles_swap();
GraphFixture two_edges_swap();

// Periodic graphs with a sample invariant closed 1-form.
PeriodicFixture torus(std::size_t d);
PeriodicFixture torus(std::size_t d, const Vec& loop_values);
PeriodicFixture hexagonal(const Rat& w0, const Rat& w1, const Rat& w2);
PeriodicFixture hexagonal();
PeriodicFixture square_index2();
PeriodicFixture loop_2_0();

/// Names accepted by files(); "torus-d" stands for torus-1, torus-2, ...
std::vector<std::string> names();

/// Canonical JSON documents for a named fixture as (file name, document)
/// pairs. Throws InputError for unknown names.
std::vector<std::pair<std::string, io::Json>> files(const std::string& name);

} // namespace eqcoh::fixtures
