#pragma once

#include "eqcoh/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eqcoh {

using IntVec = std::vector<BigInt>;
using IntMatrix = std::vector<IntVec>; // row-major, rows may be empty

/// Row-style Hermite normal form with transform: transform * input = form.
/// The first `rank` rows of `form` are nonzero with strictly increasing pivot
/// columns, positive pivots, and entries above each pivot reduced into
/// [0, pivot). The remaining rows are zero, so the corresponding rows of
/// `transform` span the integer left kernel of the input.
struct Hermite {
    IntMatrix form;
    IntMatrix transform;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
    /// Nonzero rows only: the canonical basis of the lattice.
    [[nodiscard]] IntMatrix basis() const;
    [[nodiscard]] IntMatrix left_kernel() const;
    /// Index of the lattice in Z^cols, or nullopt if it has lower rank.
    [[nodiscard]] std::optional<BigInt> index() const;
    [[nodiscard]] bool is_full() const;
};

Hermite hermite(const IntMatrix& rows, std::size_t cols);

IntVec int_vec(const std::vector<std::int64_t>& v);
IntVec row_times(const IntVec& coeffs, const IntMatrix& m, std::size_t cols);

} // namespace eqcoh
