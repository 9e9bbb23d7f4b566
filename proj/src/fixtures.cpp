#include "eqcoh/fixtures.hpp"

#include "eqcoh/errors.hpp"

#include <charconv>

namespace eqcoh::fixtures {

LinearInstance shear() {
    LinearInstance inst;
    inst.dim_U = 2;
    inst.dim_W = 1;
    inst.pi = Mat{{1, 0}};
    inst.generators.push_back({Mat{{1, 0}, {1, 1}}, Mat{{1}}, std::nullopt});
    return inst;
}

// U = Q^4, W = Q^3, pi(x) = (x1, x3, x2 - x4), ker pi = span{(0,1,0,1)}.
// g1 adds x1 to both kernel coordinates, g2 adds x3; both act trivially on W.
LinearInstance double_shear() {
    LinearInstance inst;
    inst.dim_U = 4;
    inst.dim_W = 3;
    inst.pi = Mat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, -1}};
    inst.generators.push_back(
        {Mat{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}, Mat::identity(3), std::nullopt});
    inst.generators.push_back(
        {Mat{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}, Mat::identity(3), std::nullopt});
    return inst;
}

LinearInstance identity_action() {
    LinearInstance inst;
    inst.dim_U = 3;
    inst.dim_W = 2;
    inst.pi = Mat{{1, 1, 0}, {0, 0, 1}};
    inst.generators.push_back({Mat::identity(3), Mat::identity(2), 1U});
    return inst;
}

namespace {

Permutation shift_perm(std::size_t n, std::size_t by) {
    Permutation p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = (v + by) % n;
    return p;
}

} // namespace

GraphFixture cycle_rotation(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({static_cast<std::int64_t>(v), v, (v + 1) % n});
    return {Graph(n, std::move(edges)), GraphAction{{shift_perm(n, 1)}, {static_cast<unsigned>(n)}}};
}

GraphFixture path2_swap() { return {Graph(2, {{0, 0, 1}}), GraphAction{{{1, 0}}, {2U}}}; }

GraphFixture path3_reflection() { return {Graph(3, {{0, 0, 1}, {1, 1, 2}}), GraphAction{{{2, 1, 0}}, {2U}}}; }

GraphFixture triangle_s3() {
    return {Graph(3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}), GraphAction{{{1, 0, 2}, {0, 2, 1}}, {2U, 2U}}};
}

GraphFixture two_triangles_swap() {
    return {Graph(6, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {3, 3, 4}, {4, 4, 5}, {5, 5, 3}}),
            GraphAction{{{3, 4, 5, 0, 1, 2}}, {2U}}};
}

GraphFixture two_edges_swap() { return {Graph(4, {{0, 0, 1}, {1, 2, 3}}), GraphAction{{{2, 3, 0, 1}}, {2U}}}; }

PeriodicFixture torus(std::size_t d, const Vec& loop_values) {
    if (loop_values.size() != d) throw InputError("torus needs one loop value per dimension");
    std::vector<Edge> edges;
    std::vector<std::vector<std::int64_t>> volts;
    for (std::size_t j = 0; j < d; ++j) {
        edges.push_back({static_cast<std::int64_t>(j), 0, 0});
        std::vector<std::int64_t> t(d, 0);
        t[j] = 1;
        volts.push_back(std::move(t));
    }
    return {PeriodicGraph(d, Graph(1, std::move(edges)), std::move(volts)), Cochain1{loop_values}};
}

PeriodicFixture torus(std::size_t d) {
    static const std::vector<Rat> base{5, -3, Rat(7, 2), Rat(-1, 3)};
    Vec values;
    for (std::size_t j = 0; j < d; ++j)
        values.push_back(j < base.size() ? base[j] : Rat(static_cast<std::int64_t>(j + 1)));
    return torus(d, values);
}

PeriodicFixture hexagonal(const Rat& w0, const Rat& w1, const Rat& w2) {
    Graph g(2, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
    return {PeriodicGraph(2, std::move(g), {{0, 0}, {1, 0}, {0, 1}}), Cochain1{{w0, w1, w2}}};
}

PeriodicFixture hexagonal() { return hexagonal(1, 3, -2); }

PeriodicFixture square_index2() {
    return {PeriodicGraph(2, Graph(1, {{0, 0, 0}, {1, 0, 0}}), {{2, 0}, {0, 1}}), Cochain1{{1, 1}}};
}

PeriodicFixture loop_2_0() { return {PeriodicGraph(2, Graph(1, {{0, 0, 0}}), {{2, 0}}), Cochain1{{1}}}; }

std::vector<std::string> names() {
    return {"torus-d", "hex", "square-index2", "loop-2-0", "c4-rotation", "p2-swap",
            "k3-s3",   "shear", "double-shear", "identity", "two-triangles-swap"};
}

namespace {

using Files = std::vector<std::pair<std::string, io::Json>>;

Files instance_files(const std::string& name, const LinearInstance& inst) {
    return {{name + ".instance.json", io::to_json(inst)}};
}

Files graph_files(const std::string& name, const GraphFixture& f) {
    return {{name + ".graph.json", io::to_json(f.graph)}, {name + ".action.json", io::to_json(f.action)}};
}

Files periodic_files(const std::string& name, const PeriodicFixture& f) {
    return {{name + ".pgraph.json", io::to_json(f.graph)},
            {name + ".w.json", io::to_json(f.w, f.graph.quotient())}};
}

std::optional<std::size_t> torus_dimension(const std::string& name) {
    constexpr std::string_view prefix = "torus-";
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::size_t d = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec != std::errc() || ptr != last || d == 0 || d > 16) return std::nullopt;
    return d;
}

} // namespace

Files files(const std::string& name) {
    if (auto d = torus_dimension(name)) return periodic_files(name, torus(*d));
    if (name == "hex") return periodic_files(name, hexagonal());
    if (name == "square-index2") return periodic_files(name, square_index2());
    if (name == "loop-2-0") return periodic_files(name, loop_2_0());
    if (name == "c4-rotation") return graph_files(name, cycle_rotation(4));
    if (name == "p2-swap") return graph_files(name, path2_swap());
    if (name == "k3-s3") return graph_files(name, triangle_s3());
    if (name == "two-triangles-swap") return graph_files(name, two_triangles_swap());
    if (name == "shear") return instance_files(name, shear());
    if (name == "double-shear") return instance_files(name, double_shear());
    if (name == "identity") return instance_files(name, identity_action());
    std::string list;
    for (const auto& n : names()) list += (list.empty() ? "" : ", ") + n;
    throw InputError("unknown fixture '" + name + "'; available: " + list + " (torus-d with d in 1..16)");
}

} // namespace eqcoh::fixtures
