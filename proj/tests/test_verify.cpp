#include <doctest.h>

#include "eqcoh/fixtures.hpp"
#include "eqcoh/verify.hpp"

using namespace eqcoh;

namespace {

bool same(const verify::Outcome& a, const verify::Outcome& b) {
    return a.index == b.index && a.kind == b.kind && a.iff.dim == b.iff.dim && a.iff.m == b.iff.m &&
           a.iff.d == b.iff.d && a.iff.condition_i == b.iff.condition_i &&
           a.iff.condition_ii == b.iff.condition_ii && a.ujk_found == b.ujk_found && a.decomposed == b.decomposed &&
           a.lemma_checked == b.lemma_checked && a.torsion_checked == b.torsion_checked && a.failures == b.failures &&
           a.instance.pi == b.instance.pi;
}

} // namespace

TEST_CASE("parallel and serial runs agree") {
    verify::Options opts;
    opts.seed = 3;
    opts.count = 120;
    const verify::Report p = verify::run(opts);
    const verify::Report s = verify::run_serial(opts);
    REQUIRE(p.outcomes.size() == s.outcomes.size());
    for (std::size_t i = 0; i < p.outcomes.size(); ++i) CHECK(same(p.outcomes[i], s.outcomes[i]));
    CHECK(p.violations() == 0);
}

TEST_CASE("runs exercise every branch") {
    verify::Options opts;
    opts.count = 200;
    const verify::Report r = verify::run(opts);
    std::size_t graph = 0, equality = 0, decomposed = 0, torsion = 0, no_i = 0, no_ii = 0;
    for (const auto& o : r.outcomes) {
        graph += o.kind == verify::Kind::Graph;
        equality += o.iff.md() > 0 && o.iff.dim == o.iff.md();
        decomposed += o.decomposed;
        torsion += o.torsion_checked > 0;
        no_i += !o.iff.condition_i;
        no_ii += o.iff.condition_i && !o.iff.condition_ii;
    }
    CHECK(graph == 40);
    CHECK(equality > 0);
    CHECK(decomposed > 0);
    CHECK(torsion > 0);
    CHECK(no_i > 0);
    CHECK(no_ii > 0);
}

TEST_CASE("a broken condition check is caught") {
    verify::Options opts;
    opts.count = 100;
    verify::Hooks mutant;
    mutant.condition_ii = [](const LinearInstance&) { return true; };
    const verify::Report r = verify::run(opts, mutant);
    CHECK(r.violations() > 0);

    std::size_t iff_failures = 0;
    for (const auto& o : r.outcomes)
        for (const auto& f : o.failures) iff_failures += f.rfind("IFF VIOLATION", 0) == 0;
    CHECK(iff_failures > 0);

    for (const auto& o : r.outcomes) {
        if (o.ok()) continue;
        const LinearInstance small = verify::minimize(o.instance, opts, mutant, 2 * o.index + 1);
        CHECK(small.generators.size() <= o.instance.generators.size());
        auto rng = random::stream(opts.seed, 2 * o.index + 1);
        CHECK_FALSE(verify::check_instance(small, rng, opts, mutant).ok());
        break;
    }
}

TEST_CASE("fixtures pass every check") {
    verify::Options opts;
    opts.shifts = 10;
    for (const auto& inst : {fixtures::shear(), fixtures::double_shear(), fixtures::identity_action()}) {
        auto rng = random::stream(1, 0);
        const verify::Outcome o = verify::check_instance(inst, rng, opts, {});
        CHECK(o.ok());
    }
}
