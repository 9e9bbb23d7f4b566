#pragma once

#include "eqcoh/graph.hpp"
#include "eqcoh/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqcoh {

/// A Z^d-periodic graph given by its finite quotient and an integer voltage
/// per stored edge. The lift has vertices (v, b) for b in Z^d and, for every
/// quotient edge e : v -> v', edges (v, b) -> (v', b + t(e)). Translations
/// act freely on the lift; only the quotient is ever stored.
class PeriodicGraph {
public:
    PeriodicGraph() = default;
    /// Throws InputError unless there is one voltage of length d per edge.
    PeriodicGraph(std::size_t d, Graph quotient, std::vector<std::vector<std::int64_t>> voltages);

    [[nodiscard]] std::size_t rank() const { return d_; }
    [[nodiscard]] const Graph& quotient() const { return quotient_; }
    [[nodiscard]] const std::vector<std::int64_t>& voltage(std::size_t edge) const { return voltages_.at(edge); }
    [[nodiscard]] const std::vector<std::vector<std::int64_t>>& voltages() const { return voltages_; }

private:
    std::size_t d_ = 0;
    Graph quotient_;
    std::vector<std::vector<std::int64_t>> voltages_;
};

/// Fundamental cycle of a non-tree edge: the edge itself followed by the tree
/// path back. `coefficients` has one entry per quotient edge (+1, -1 or 0 for
/// the stored orientation) and `voltage` is its total translation.
struct FundamentalCycle {
    std::size_t edge = 0;
    std::vector<std::int64_t> coefficients;
    IntVec voltage;
};

struct CycleStructure {
    std::vector<std::vector<std::size_t>> components;     // quotient components
    std::vector<std::size_t> component_of;                // per vertex
    std::vector<std::vector<FundamentalCycle>> cycles;    // per component
};

CycleStructure cycle_structure(const PeriodicGraph& pg);

/// Sublattice of Z^d generated by the cycle voltages of one quotient component.
struct PeriodLattice {
    Hermite hermite; // of the fundamental-cycle voltages, in cycle order
    [[nodiscard]] IntMatrix basis() const { return hermite.basis(); }
    [[nodiscard]] std::size_t rank() const { return hermite.rank(); }
    [[nodiscard]] bool is_full() const { return hermite.is_full(); }
};

std::vector<PeriodLattice> period_lattices(const PeriodicGraph& pg);

/// True iff every period lattice is all of Z^d, i.e. every translation keeps
/// each lift vertex in its own connected component.
bool action_is_closed(const PeriodicGraph& pg);

/// Lift components above each quotient component: the index [Z^d : L_k], or
/// nullopt when the lattice is rank deficient (infinitely many components).
std::vector<std::optional<BigInt>> lift_component_counts(const PeriodicGraph& pg);
/// Total over all quotient components; nullopt means infinite.
std::optional<BigInt> lift_component_count(const PeriodicGraph& pg);

/// A translation-invariant 1-form on the lift is a 1-cochain on the quotient.
/// It is closed on the lift iff its sum vanishes on every combination of
/// quotient cycles (within one component) with total voltage zero.
bool is_invariant_closed(const PeriodicGraph& pg, const Cochain1& w);

struct PeriodicDecomposition {
    std::vector<Vec> coefficients; // [j][k], d x (number of quotient components)
    Cochain0 potential;            // invariant part, 0 at each component's smallest vertex
};

/// w(e) = f(te) - f(oe) + sum_j a_{j,k} t(e)_j for every edge e over component k.
Cochain1 reconstruct(const PeriodicGraph& pg, const PeriodicDecomposition& dec);

/// Splits a closed invariant 1-form into period coefficients and a periodic
/// potential. Throws PreconditionError with code "period-lattice-not-full" or
/// "not-closed" when the hypotheses fail; never returns partial data.
PeriodicDecomposition decompose_periodic(const PeriodicGraph& pg, const Cochain1& w);

/// Voltages re-expressed in the generating set whose i-th element is row i
/// of `basis` (in standard coordinates). `basis` must be unimodular. The
/// coefficients of a decomposition transform as a' = basis * a.
PeriodicGraph change_generators(const PeriodicGraph& pg, const std::vector<std::vector<std::int64_t>>& basis);

/// d x m edge forms e -> t(e)_j restricted to component k, in [j][k] order.
std::vector<Vec> period_generator_forms(const PeriodicGraph& pg);

/// Rank of the period generator forms modulo quotient-exact forms.
std::size_t realized_period_dim(const PeriodicGraph& pg);

/// dim (closed invariant forms) / (quotient-exact forms), computed from the
/// zero-voltage cycle conditions alone.
std::size_t closed_quotient_dim(const PeriodicGraph& pg);

struct TruncationReport {
    std::size_t radius = 0;
    std::size_t cells = 0;
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::optional<std::string> first_mismatch;
    [[nodiscard]] bool passed() const { return mismatches == 0; }
};

/// Materializes lift cells b in [-radius, radius]^d and checks
/// w(e) = F(te) - F(oe) on every lift edge leaving the window's vertices,
/// where F(v, b) = f(v) + sum_j a_{j,k(v)} b_j. Parallel over cells.
TruncationReport truncation_oracle(const PeriodicGraph& pg, const Cochain1& w, const PeriodicDecomposition& dec,
                                   std::size_t radius);
/// Single-threaded reference for truncation_oracle; identical report.
TruncationReport truncation_oracle_serial(const PeriodicGraph& pg, const Cochain1& w,
                                          const PeriodicDecomposition& dec, std::size_t radius);

} // namespace eqcoh
