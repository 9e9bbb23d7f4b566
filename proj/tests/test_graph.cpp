#include <doctest.h>

#include "eqcoh/errors.hpp"
#include "eqcoh/fixtures.hpp"
#include "eqcoh/graph.hpp"
#include "eqcoh/random.hpp"

#include <numeric>

using namespace eqcoh;

namespace {

// Union-find component count; independent of the BFS in components().
std::size_t union_find_components(const Graph& g) {
    std::vector<std::size_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t count = g.num_vertices();
    for (const auto& e : g.edges()) {
        const auto a = find(e.o), b = find(e.t);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("coboundary") {
    CHECK(coboundary(Graph(2, {{0, 0, 1}})) == Mat{{-1, 1}});
    const Graph path(3, {{0, 0, 1}, {1, 1, 2}});
    CHECK(rank(coboundary(path)) == 2);
    CHECK(kernel_basis(coboundary(path)) == Subspace::span(3, {{1, 1, 1}}));
    const auto two = fixtures::two_triangles_swap().graph;
    CHECK(kernel_basis(coboundary(two)).dim() == 2);
    CHECK(coboundary(Graph(1, {{7, 0, 0}})) == Mat{{0}});
}

TEST_CASE("components and indicators") {
    CHECK(kernel_indicators(fixtures::cycle_rotation(5).graph).size() == 1);
    CHECK(kernel_indicators(fixtures::cycle_rotation(5).graph)[0].values == Vec(5, Rat(1)));
    CHECK(components(Graph(4, {})).size() == 4);
    const auto c = components(fixtures::two_triangles_swap().graph);
    CHECK(c == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("kernel dimension equals component count on random multigraphs") {
    auto rng = random::stream(41, 0);
    std::size_t loops = 0, edgeless = 0;
    for (int i = 0; i < 200; ++i) {
        const Graph g = random::random_graph(rng, 8, i % 10 == 0 ? 0 : 12);
        const Mat d = coboundary(g);
        const Subspace k = kernel_basis(d);
        CHECK(k.dim() == union_find_components(g));
        CHECK(k.dim() == components(g).size());
        CHECK(k == Subspace::span(g.num_vertices(), [&] {
                  std::vector<Vec> v;
                  for (const auto& f : kernel_indicators(g)) v.push_back(f.values);
                  return v;
              }()));
        loops += !g.loop_indices().empty();
        edgeless += g.num_edges() == 0;
    }
    CHECK(loops > 0);
    CHECK(edgeless > 0);
}

TEST_CASE("potentials") {
    auto rng = random::stream(42, 0);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random::random_graph(rng, 7, 10);
        Cochain0 f{Vec(g.num_vertices())};
        for (auto& x : f.values) x = random::random_rat(rng, 5, 4);
        const Cochain1 w{coboundary(g) * f.values};
        REQUIRE(is_closed(g, w));
        const auto p = potential(g, w);
        REQUIRE(p);
        const auto comp = component_of(g);
        const auto cs = components(g);
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            CHECK(p->values[v] == f.values[v] - f.values[cs[comp[v]].front()]);
    }
    const Cochain1 one{Vec(3, Rat(1))};
    CHECK_FALSE(is_closed(fixtures::triangle_s3().graph, one));
    CHECK_FALSE(potential(fixtures::triangle_s3().graph, one));
    CHECK(is_closed(Graph(3, {{0, 0, 1}, {1, 1, 2}}), Cochain1{{Rat(4), Rat(-1, 2)}}));
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(2, {{0, 0, 2}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 0, 1}, {0, 1, 0}}), InputError);
    const Graph g(2, {{0, 0, 1}});
    CHECK_THROWS_AS(validate_action(g, GraphAction{{{0, 0}}, {}}), InputError);
    CHECK_THROWS_AS(validate_action(g, GraphAction{{{0}}, {}}), InputError);
}

TEST_CASE("action checks") {
    const auto c4 = fixtures::cycle_rotation(4);
    ActionChecks a = action_checks(c4.graph, c4.action);
    CHECK(a.is_automorphism);
    CHECK(a.is_free);
    CHECK(a.is_closed_in_components);
    CHECK(a.group_order == 4);

    const auto p2 = fixtures::path2_swap();
    a = action_checks(p2.graph, p2.action);
    CHECK(a.is_automorphism);
    CHECK(a.is_free);
    CHECK(a.is_closed_in_components);

    const auto p3 = fixtures::path3_reflection();
    a = action_checks(p3.graph, p3.action);
    CHECK(a.is_automorphism);
    CHECK_FALSE(a.is_free);

    const auto k3 = fixtures::triangle_s3();
    a = action_checks(k3.graph, k3.action);
    CHECK(a.group_order == 6);
    CHECK_FALSE(a.is_free);

    const auto tt = fixtures::two_triangles_swap();
    a = action_checks(tt.graph, tt.action);
    CHECK(a.is_free);
    CHECK_FALSE(a.is_closed_in_components);

    const Graph path(3, {{0, 0, 1}, {1, 1, 2}});
    a = action_checks(path, GraphAction{{{1, 0, 2}}, {}});
    CHECK_FALSE(a.is_automorphism);
    CHECK_THROWS_AS(to_instance(path, GraphAction{{{1, 0, 2}}, {}}), PreconditionError);
}

TEST_CASE("group closure cap") {
    // S_9 has 362880 elements
    const std::size_t n = 9;
    Permutation cycle(n), swap(n);
    for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = (i + 1) % n;
        swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    try {
        (void)group_closure(n, {cycle, swap});
        FAIL("expected group-too-large");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "group-too-large");
    }
    CHECK(group_closure(4, {{1, 2, 3, 0}}).size() == 4);
    CHECK(permutation_order({1, 0, 3, 4, 2}) == 6);
}

TEST_CASE("to_instance matrices") {
    const auto p2 = fixtures::path2_swap();
    const LinearInstance inst = to_instance(p2.graph, p2.action);
    CHECK(inst.generators[0].on_W == Mat{{-1}});
    CHECK(inst.generators[0].on_U == Mat{{0, 1}, {1, 0}});
    CHECK(validate(inst).ok());

    const auto c4 = fixtures::cycle_rotation(4);
    const LinearInstance c = to_instance(c4.graph, c4.action);
    CHECK(validate(c).ok());
    CHECK(power(c.generators[0].on_U, 4) == Mat::identity(4));
    CHECK(power(c.generators[0].on_W, 4) == Mat::identity(4));

    const LinearInstance id = to_instance(c4.graph, GraphAction{{{0, 1, 2, 3}}, {}});
    CHECK(id.generators[0].on_U == Mat::identity(4));
    CHECK(id.generators[0].on_W == Mat::identity(4));
}

TEST_CASE("parallel edges and loops map consistently") {
    // two parallel edges and a loop at each end, swapped by the reflection
    const Graph g(2, {{10, 0, 1}, {11, 1, 0}, {12, 0, 0}, {13, 1, 1}});
    const auto img = edge_permutation(g, {1, 0});
    REQUIRE(img);
    const LinearInstance inst = to_instance(g, GraphAction{{{1, 0}}, {}});
    CHECK(validate(inst).ok());
}

TEST_CASE("analyze finite actions") {
    for (const auto& f : {fixtures::triangle_s3(), fixtures::cycle_rotation(6), fixtures::cycle_rotation(4),
                          fixtures::path2_swap(), fixtures::two_triangles_swap()}) {
        const GraphActionReport r = analyze_graph_action(f.graph, f.action);
        CHECK(r.iff.dim == 0);
        CHECK(r.prediction_holds);
        CHECK(r.consistent());
    }
    const auto es = fixtures::two_edges_swap();
    const GraphActionReport r = analyze_graph_action(es.graph, es.action);
    CHECK(r.m == 2);
    CHECK_FALSE(r.component_indicators_invariant);
    CHECK_FALSE(r.iff.condition_i);
    CHECK(r.iff.dim < r.iff.md());
    CHECK(r.consistent());
}

TEST_CASE("random graph actions are automorphisms") {
    auto rng = random::stream(43, 0);
    for (int i = 0; i < 100; ++i) {
        const auto f = random::random_graph_action(rng, 6);
        CHECK(action_checks(f.graph, f.action).is_automorphism);
        const GraphActionReport r = analyze_graph_action(f.graph, f.action);
        CHECK(r.consistent());
        CHECK(r.iff.dim == 0);
    }
}
