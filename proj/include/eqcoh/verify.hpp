#pragma once

#include "eqcoh/instance.hpp"
#include "eqcoh/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eqcoh::verify {

struct Options {
    std::uint64_t seed = 7;
    std::size_t count = 500;
    std::size_t max_dim = 6;
    std::size_t max_generators = 3;
    std::size_t shifts = 2; // random U^G shifts of u_{j,k} per decomposition
};

/// Replaceable checks, so tests can verify that the harness itself catches a
/// broken criterion.
struct Hooks {
    ConditionCheck condition_ii = check_condition_ii;
};

enum class Kind { Linear, Graph };

struct Outcome {
    std::size_t index = 0;
    Kind kind = Kind::Linear;
    LinearInstance instance;
    IffReport iff;
    bool ujk_found = false;
    bool decomposed = false;
    bool lemma_checked = false;
    std::size_t torsion_checked = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Runs every property check on one instance. `rng` supplies the random
/// targets and shifts.
Outcome check_instance(const LinearInstance& inst, random::Rng& rng, const Options& opts, const Hooks& hooks);

/// Deterministically generated instance `index` of a run.
LinearInstance generate(const Options& opts, std::size_t index, Kind* kind = nullptr);

struct Report {
    Options options;
    std::vector<Outcome> outcomes; // ordered by index
    [[nodiscard]] std::size_t violations() const;
};

/// Parallel over instances (OpenMP); results are identical to run_serial.
Report run(const Options& opts, const Hooks& hooks = {});
Report run_serial(const Options& opts, const Hooks& hooks = {});

/// Drops generators while the failure persists; returns the smallest failing
/// instance found.
LinearInstance minimize(const LinearInstance& inst, const Options& opts, const Hooks& hooks, std::uint64_t stream_id);

const char* to_string(Kind kind);

} // namespace eqcoh::verify
