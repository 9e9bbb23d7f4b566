// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cli.hpp"
#include "eqcoh/fixtures.hpp"
#include "eqcoh/json_io.hpp"
#include "eqcoh/verify.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace eqcoh;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    bool ok = true;
    std::vector<std::string> problems;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

int report(int number, const std::string& title, const Criterion& c, const std::string& detail,
           std::chrono::steady_clock::time_point start) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << detail << ", "
              << ms.count() << " ms]\n";
    for (const auto& p : c.problems) std::cout << "     - " << p << "\n";
    return c.ok ? 0 : 1;
}

struct Named {
    std::string name;
    LinearInstance inst;
};

std::vector<Named> curated() {
    std::vector<Named> out{{"shear", fixtures::shear()},
                           {"double-shear", fixtures::double_shear()},
                           {"identity", fixtures::identity_action()}};
    const std::vector<std::pair<std::string, fixtures::GraphFixture>> graphs{
        {"c4-rotation", fixtures::cycle_rotation(4)},
        {"p2-swap", fixtures::path2_swap()},
        {"k3-s3", fixtures::triangle_s3()},
        {"two-triangles-swap", fixtures::two_triangles_swap()}};
    for (const auto& [name, f] : graphs) out.push_back({name, to_instance(f.graph, f.action)});
    return out;
}

// dim pi(U)^G / pi(U^G) through the preimage: pi(U)^G = pi(Ũ) with ker pi ⊂ Ũ,
// and dim pi(U^G) = dim U^G - dim(U^G ∩ ker pi).
std::size_t preimage_formula_dim(const LinearInstance& inst) {
    const Subspace tilde = invariant_preimage(inst);
    const Subspace fixed = invariant_subspace_U(inst);
    const Subspace ker = kernel_of_pi(inst);
    return tilde.dim() - ker.dim() - fixed.dim() + intersect(fixed, ker).dim();
}

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

int cli_code(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out) *out = o.str();
    return code;
}

// 1. bound and equivalence
int criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    const std::map<std::string, std::size_t> expected_dim{{"shear", 1},       {"double-shear", 2}, {"identity", 0},
                                                          {"c4-rotation", 0}, {"p2-swap", 0},      {"k3-s3", 0},
                                                          {"two-triangles-swap", 0}};
    for (const auto& [name, inst] : curated()) {
        const IffReport r = verify_iff(inst);
        c.expect(!r.violation(), name + ": bound or equivalence violated");
        c.expect(r.dim == preimage_formula_dim(inst), name + ": oracle disagrees with preimage formula");
        c.expect(r.dim == expected_dim.at(name), name + ": dim " + std::to_string(r.dim));
    }
    verify::Options opts;
    opts.seed = 7;
    opts.count = 500;
    opts.max_dim = 6;
    opts.max_generators = 3;
    const verify::Report vr = verify::run(opts);
    std::size_t equality = 0, mismatched = 0;
    for (const auto& o : vr.outcomes) {
        c.expect(o.ok(), "random instance " + std::to_string(o.index) + ": " +
                             (o.failures.empty() ? std::string() : o.failures.front()));
        equality += o.iff.md() > 0 && o.iff.dim == o.iff.md();
        mismatched += o.iff.dim != preimage_formula_dim(o.instance);
    }
    c.expect(mismatched == 0, std::to_string(mismatched) + " random oracle dims disagree with preimage formula");
    c.expect(equality > 0, "no random instance reached dim = m d");
    return report(1, "dim <= m d, and dim = m d iff (i) and (ii)", c,
                  "7 fixtures, " + std::to_string(vr.outcomes.size()) + " random, " + std::to_string(equality) +
                      " equality cases, " + std::to_string(vr.violations()) + " violations",
                  start);
}

// 2. decomposition round trip and independence of the u_{j,k} choice
int criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    verify::Options opts;
    opts.shifts = 10;
    std::size_t decomposed = 0;
    for (const auto& [name, inst] : curated()) {
        if (!check_condition_i(inst)) continue;
        const auto kb = kernel_of_pi(inst).basis_vectors();
        const auto ujk = find_ujk(inst, kb);
        c.expect(ujk.has_value() == check_condition_ii(inst), name + ": find_ujk disagrees with condition (ii)");
        if (!ujk) continue;
        auto rng = random::stream(2, decomposed);
        const Subspace fixed = invariant_subspace_U(inst);
        const Subspace target = oracle_quotient_dim(inst).invariant_image;
        for (int sample = 0; sample < 5; ++sample) {
            const Vec w = random::random_combination(rng, target);
            const Decomposition dec = decompose(inst, w, *ujk, kb);
            c.expect(inst.pi * dec.preimage == w, name + ": reconstruction");
            c.expect(fixed.contains(dec.invariant_part), name + ": invariant part moved");
            for (std::size_t s = 0; s < opts.shifts; ++s) {
                PeriodPreimages shifted = *ujk;
                for (auto& row : shifted)
                    for (auto& u : row) u = u + random::random_combination(rng, fixed);
                c.expect(decompose(inst, w, shifted, kb).coefficients == dec.coefficients, name + ": shift changed a");
            }
            ++decomposed;
        }
    }
    opts.count = 500;
    const verify::Report vr = verify::run(opts);
    std::size_t random_decomposed = 0;
    for (const auto& o : vr.outcomes) {
        random_decomposed += o.decomposed;
        c.expect(o.ok(), "random instance " + std::to_string(o.index));
    }
    c.expect(decomposed >= 10 && random_decomposed > 0, "too few decompositions exercised");
    return report(2, "decompose reconstructs w; coefficients unchanged under U^G shifts", c,
                  std::to_string(decomposed) + " fixture targets and " + std::to_string(random_decomposed) +
                      " random instances, 10 shifts each",
                  start);
}

// 3. commutation, torsion, and finite groups giving dim 0
int criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    auto list = curated();
    const auto c6 = fixtures::cycle_rotation(6);
    list.push_back({"c6-rotation", to_instance(c6.graph, c6.action)});
    std::size_t checked = 0, torsion = 0;
    for (const auto& [name, inst] : list) {
        if (!check_condition_i(inst)) continue;
        ++checked;
        c.expect(check_lemma_commutation(inst), name + ": generators do not commute on the invariant preimage");
        const TorsionCheck t = check_torsion_trivial(inst);
        c.expect(t.holds, name + ": finite-order generator moves the invariant preimage");
        torsion += t.generators_checked;
    }
    const std::vector<std::pair<std::string, fixtures::GraphFixture>> finite{
        {"c4-rotation", fixtures::cycle_rotation(4)}, {"c6-rotation", c6},
        {"p2-swap", fixtures::path2_swap()},          {"p3-reflection", fixtures::path3_reflection()},
        {"k3-s3", fixtures::triangle_s3()},           {"two-triangles-swap", fixtures::two_triangles_swap()},
        {"two-edges-swap", fixtures::two_edges_swap()}};
    for (const auto& [name, f] : finite) {
        const GraphActionReport r = analyze_graph_action(f.graph, f.action);
        c.expect(r.iff.dim == 0, name + ": finite group gave dim " + std::to_string(r.iff.dim));
        c.expect(r.consistent(), name + ": report inconsistent");
    }
    return report(3, "commutation and torsion on the invariant preimage; finite groups give dim 0", c,
                  std::to_string(checked) + " fixtures under (i), " + std::to_string(torsion) +
                      " torsion generators, " + std::to_string(finite.size()) + " finite actions",
                  start);
}

// 4. kernel of the coboundary
int criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    auto rng = random::stream(4, 0);
    std::size_t loops = 0, parallel = 0, edgeless = 0;
    const std::size_t count = 150;
    for (std::size_t i = 0; i < count; ++i) {
        const Graph g = random::random_graph(rng, 9, i % 8 == 0 ? 0 : 14);
        const std::size_t k = kernel_basis(coboundary(g)).dim();
        c.expect(k == union_find_components(g), "graph " + std::to_string(i) + ": kernel dim " + std::to_string(k));
        loops += !g.loop_indices().empty();
        edgeless += g.num_edges() == 0;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        bool par = false;
        for (const auto& e : g.edges()) par |= !seen.insert(std::minmax(e.o, e.t)).second;
        parallel += par;
    }
    c.expect(loops > 0 && parallel > 0 && edgeless > 0, "corpus lacks loops, parallel edges or edgeless graphs");
    return report(4, "dim ker coboundary = number of components", c,
                  std::to_string(count) + " graphs: " + std::to_string(loops) + " with loops, " +
                      std::to_string(parallel) + " with parallel edges, " + std::to_string(edgeless) + " edgeless",
                  start);
}

// 5. torus
int criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    auto rng = random::stream(5, 0);
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto t = fixtures::torus(d);
        c.expect(realized_period_dim(t.graph) == d, "torus-" + std::to_string(d) + ": period generators");
        c.expect(closed_quotient_dim(t.graph) == d, "torus-" + std::to_string(d) + ": closed forms mod exact");
        for (int i = 0; i < 25; ++i) {
            Vec values(d);
            for (auto& v : values) v = random::random_rat(rng, 20, 9);
            const auto f = fixtures::torus(d, values);
            const auto dec = decompose_periodic(f.graph, f.w);
            for (std::size_t j = 0; j < d; ++j)
                c.expect(dec.coefficients[j] == Vec{values[j]}, "torus-" + std::to_string(d) + ": a differs from c");
            c.expect(dec.potential.values == Vec{0}, "torus-" + std::to_string(d) + ": f not zero");
        }
    }
    return report(5, "torus d = 1..4 has d period generators and a = c, f = 0", c, "100 random loop values", start);
}

// 6. periodic decomposition, truncation and refusals
int criterion_6() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    auto rng = random::stream(6, 0);
    const std::vector<std::pair<std::string, fixtures::PeriodicFixture>> list{
        {"torus-2", fixtures::torus(2)}, {"torus-3", fixtures::torus(3)}, {"hex", fixtures::hexagonal()}};
    std::size_t pairs = 0, checks = 0;
    for (const auto& [name, f] : list) {
        for (int i = 0; i < 100; ++i) {
            const auto dec = random::random_periodic_decomposition(rng, f.graph);
            const Cochain1 w = reconstruct(f.graph, dec);
            const auto back = decompose_periodic(f.graph, w);
            c.expect(back.coefficients == dec.coefficients && back.potential.values == dec.potential.values,
                     name + ": round trip");
            ++pairs;
        }
        const auto dec = decompose_periodic(f.graph, f.w);
        const TruncationReport t = truncation_oracle(f.graph, f.w, dec, 3);
        c.expect(t.passed(), name + ": " + std::to_string(t.mismatches) + " truncation mismatches");
        checks += t.checks;
    }
    const TruncationReport t2 = truncation_oracle(list[0].second.graph, list[0].second.w,
                                                  decompose_periodic(list[0].second.graph, list[0].second.w), 3);
    c.expect(t2.checks == 2 * 49, "torus-2 at radius 3 should make 98 checks");

    const fs::path dir = fs::current_path() / "acceptance-fixtures";
    fs::create_directories(dir);
    for (const std::string name : {"loop-2-0", "square-index2"}) {
        c.expect(cli_code({"fixtures", name, "--out-dir", dir.string()}) == cli::kOk, name + ": fixture files");
        const int code = cli_code({"periodic", (dir / (name + ".pgraph.json")).string(),
                                   (dir / (name + ".w.json")).string()});
        c.expect(code == cli::kPrecondition, name + ": exit " + std::to_string(code) + ", expected 3");
    }
    return report(6, "periodic round trips, truncation at radius 3, non-closed actions refused", c,
                  std::to_string(pairs) + " (a, f) pairs, " + std::to_string(checks) + " lift edge checks", start);
}

// 7. determinism
int criterion_7() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    const fs::path dir = fs::current_path() / "acceptance-fixtures";
    fs::create_directories(dir);
    std::vector<std::string> names{"torus-1", "torus-2", "torus-3", "torus-4"};
    for (const auto& n : fixtures::names())
        if (n != "torus-d") names.push_back(n);
    std::vector<std::string> write{"fixtures", "--out-dir", dir.string()};
    write.insert(write.end(), names.begin(), names.end());

    std::vector<std::vector<std::string>> commands{write, {"fixtures", "--list"}, {"verify", "--count", "100"},
                                                   {"verify", "--count", "100", "--serial"}};
    auto at = [&](const std::string& f) { return (dir / f).string(); };
    for (const auto& n : names) {
        const std::string first = fixtures::files(n).front().first;
        if (first.ends_with(".instance.json")) commands.push_back({"analyze", at(first)});
        if (first.ends_with(".pgraph.json")) {
            commands.push_back({"periodic", at(n + ".pgraph.json"), at(n + ".w.json")});
            commands.push_back({"periodic", at(n + ".pgraph.json"), at(n + ".w.json"), "--text", "--radius", "3"});
        } else if (first.ends_with(".graph.json")) {
            commands.push_back({"graph", at(n + ".graph.json"), at(n + ".action.json")});
        }
    }
    std::string verify_parallel, verify_serial;
    for (const auto& cmd : commands) {
        std::string a, b;
        const int ca = cli_code(cmd, &a);
        const int cb = cli_code(cmd, &b);
        std::string line;
        for (const auto& s : cmd) line += s + " ";
        c.expect(ca == cb && a == b, "output differs between runs: " + line);
        c.expect(ca == cli::kOk || ca == cli::kPrecondition, "unexpected exit " + std::to_string(ca) + ": " + line);
    }
    cli_code({"verify", "--count", "100"}, &verify_parallel);
    cli_code({"verify", "--count", "100", "--serial"}, &verify_serial);
    c.expect(io::Json::parse(verify_parallel)["results"] == io::Json::parse(verify_serial)["results"],
             "parallel and serial verify results differ");
    return report(7, "repeated runs produce byte-identical reports", c,
                  std::to_string(commands.size()) + " commands run twice", start);
}

} // namespace

int main() {
    int failed = 0;
    for (auto* criterion : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7}) {
        try {
            failed += criterion();
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion threw: " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
