#pragma once

#include "eqcoh/matrix.hpp"

#include <optional>
#include <vector>

namespace eqcoh {

struct Echelon {
    Mat reduced;                     // same shape as the input, zero rows at the bottom
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is the
/// first nonzero entry at or below the current row, so the output depends only
/// on the input matrix.
Echelon rref(const Mat& m);

std::size_t rank(const Mat& m);

/// A linear subspace of Q^n held in canonical form: its basis is the RREF of
/// any spanning set with zero rows removed. Two subspaces are equal iff their
/// canonical bases coincide entry-wise, so `==` is mathematical equality.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    /// Row space of `rows`.
    static Subspace row_space(const Mat& rows);
    /// Column space (image) of `m`, living in Q^{m.rows()}.
    static Subspace column_space(const Mat& m);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Mat& basis() const { return basis_; }
    [[nodiscard]] std::vector<Vec> basis_vectors() const;

    [[nodiscard]] bool contains(const Vec& v) const;
    /// Coordinates of v in the canonical basis, or nullopt if v is not in the span.
    [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// ker(m) as a canonical subspace of Q^{m.cols()}.
Subspace kernel_basis(const Mat& m);

/// Raw kernel vectors from the RREF: one per free column, with that free
/// variable set to 1 and the others to 0. Not canonicalized.
std::vector<Vec> kernel_vectors(const Mat& m);

/// Particular solution of m x = b with every free variable set to zero, or
/// nullopt if the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Inverse of a square matrix, or nullopt if it is singular.
std::optional<Mat> inverse(const Mat& m);

Subspace sum(const Subspace& a, const Subspace& b);
/// A ∩ B via the kernel of the stacked system [A^T | -B^T].
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);
bool is_subspace_of(const Subspace& a, const Subspace& b);
/// dim A − dim B. Throws std::invalid_argument unless B ⊆ A.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// m(S), a subspace of Q^{m.rows()}.
Subspace image(const Mat& m, const Subspace& s);
/// {x : m x ∈ S}, a subspace of Q^{m.cols()}.
Subspace preimage(const Mat& m, const Subspace& s);

} // namespace eqcoh
