#include "eqcoh/verify.hpp"

#include "eqcoh/errors.hpp"
#include "eqcoh/graph.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqcoh::verify {

const char* to_string(Kind kind) { return kind == Kind::Linear ? "linear" : "graph"; }

std::size_t Report::violations() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return !o.ok(); }));
}

namespace {

// Every fifth instance comes from a random permutation action on a graph.
constexpr std::size_t kGraphEvery = 5;

void run_checks(Outcome& out, random::Rng& rng, const Options& opts, const Hooks& hooks) {
    const LinearInstance& inst = out.instance;
    if (!validate(inst).ok()) {
        out.failures.emplace_back("instance failed validation");
        return;
    }
    out.iff = verify_iff(inst, hooks.condition_ii);
    if (!out.iff.bound_holds) out.failures.emplace_back("bound violated: dim > m d");
    if (!out.iff.iff_holds) out.failures.emplace_back("IFF VIOLATION: (dim == m d) != (i and ii)");
    if (!out.iff.condition_i) return;

    const auto kernel = kernel_of_pi(inst).basis_vectors();
    const auto ujk = find_ujk(inst, kernel);
    out.ujk_found = ujk.has_value();
    if (out.ujk_found != out.iff.condition_ii)
        out.failures.emplace_back("find_ujk success disagrees with condition (ii)");

    out.lemma_checked = true;
    if (!check_lemma_commutation(inst)) out.failures.emplace_back("generators do not commute on the invariant preimage");
    const TorsionCheck torsion = check_torsion_trivial(inst);
    out.torsion_checked = torsion.generators_checked;
    if (!torsion.holds) out.failures.emplace_back("finite-order generator moves the invariant preimage");

    if (!ujk) return;
    const QuotientResult q = oracle_quotient_dim(inst);
    const Vec w = random::random_combination(rng, q.invariant_image);
    const Decomposition dec = decompose(inst, w, *ujk, kernel);
    out.decomposed = true;
    if (inst.pi * dec.preimage != w) out.failures.emplace_back("decomposition does not reconstruct w");

    const Subspace fixed = invariant_subspace_U(inst);
    for (std::size_t s = 0; s < opts.shifts; ++s) {
        PeriodPreimages shifted = *ujk;
        for (auto& row : shifted)
            for (auto& u : row) u = u + random::random_combination(rng, fixed);
        const Decomposition again = decompose(inst, w, shifted, kernel);
        if (again.coefficients != dec.coefficients) {
            out.failures.emplace_back("coefficients changed under a U^G shift of u_{j,k}");
            break;
        }
    }
}

} // namespace

Outcome check_instance(const LinearInstance& inst, random::Rng& rng, const Options& opts, const Hooks& hooks) {
    Outcome out;
    out.instance = inst;
    try {
        run_checks(out, rng, opts, hooks);
    } catch (const std::exception& e) {
        out.failures.emplace_back(std::string("exception: ") + e.what());
    }
    return out;
}

LinearInstance generate(const Options& opts, std::size_t index, Kind* kind) {
    auto rng = random::stream(opts.seed, 2 * index);
    if (index % kGraphEvery == kGraphEvery - 1) {
        if (kind) *kind = Kind::Graph;
        const auto f = random::random_graph_action(rng, std::max<std::size_t>(2, opts.max_dim));
        return to_instance(f.graph, f.action);
    }
    if (kind) *kind = Kind::Linear;
    return random::random_instance(rng, {opts.max_dim, opts.max_generators, 3});
}

namespace {

Outcome evaluate(const Options& opts, const Hooks& hooks, std::size_t index) {
    Kind kind = Kind::Linear;
    Outcome out;
    try {
        const LinearInstance inst = generate(opts, index, &kind);
        auto rng = random::stream(opts.seed, 2 * index + 1);
        out = check_instance(inst, rng, opts, hooks);
    } catch (const std::exception& e) {
        out.failures.emplace_back(std::string("generation failed: ") + e.what());
    }
    out.index = index;
    out.kind = kind;
    return out;
}

} // namespace

Report run_serial(const Options& opts, const Hooks& hooks) {
    Report report{opts, {}};
    report.outcomes.reserve(opts.count);
    for (std::size_t i = 0; i < opts.count; ++i) report.outcomes.push_back(evaluate(opts, hooks, i));
    return report;
}

Report run(const Options& opts, const Hooks& hooks) {
    Report report{opts, std::vector<Outcome>(opts.count)};
    const auto count = static_cast<std::int64_t>(opts.count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        report.outcomes[idx] = evaluate(opts, hooks, idx);
    }
    return report;
}

LinearInstance minimize(const LinearInstance& inst, const Options& opts, const Hooks& hooks, std::uint64_t stream_id) {
    auto fails = [&](const LinearInstance& candidate) {
        auto rng = random::stream(opts.seed, stream_id);
        return !check_instance(candidate, rng, opts, hooks).ok();
    };
    LinearInstance best = inst;
    bool shrunk = true;
    while (shrunk && !best.generators.empty()) {
        shrunk = false;
        for (std::size_t i = 0; i < best.generators.size(); ++i) {
            LinearInstance candidate = best;
            candidate.generators.erase(candidate.generators.begin() + static_cast<std::ptrdiff_t>(i));
            if (fails(candidate)) {
                best = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return best;
}

} // namespace eqcoh::verify
