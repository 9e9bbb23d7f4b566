#include "eqcoh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace eqcoh {

Echelon rref(const Mat& m) {
    Echelon out{m, {}};
    Mat& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rat f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Mat::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return zero(ambient);
    return row_space(Mat::from_rows(ambient, vectors));
}

Subspace Subspace::row_space(const Mat& rows) {
    Echelon e = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = Mat(e.pivots.size(), rows.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(r, c) = e.reduced(r, c);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::column_space(const Mat& m) { return row_space(m.transpose()); }

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vec(r));
    return out;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector/subspace dimension mismatch");
    // In RREF the coordinate along basis row r is the entry of v at pivot r.
    Vec coords(dim());
    Vec residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        coords[r] = v[pivots_[r]];
        if (coords[r].is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_(r, c).is_zero()) residual[c] -= coords[r] * basis_(r, c);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

// ---------------------------------------------------------------------------

std::vector<Vec> kernel_vectors(const Mat& m) {
    const Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

Subspace kernel_basis(const Mat& m) { return Subspace::span(m.cols(), kernel_vectors(m)); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Echelon e = rref(hstack(m, Mat::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
}

} // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // x = A^T alpha = B^T beta  <=>  [A^T | -B^T] (alpha; beta) = 0
    const Mat stacked = hstack(a.basis().transpose(), Rat(-1) * b.basis().transpose());
    std::vector<Vec> vectors;
    for (const Vec& k : kernel_vectors(stacked)) {
        const Vec alpha(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        vectors.push_back(a.basis().transpose() * alpha);
    }
    return Subspace::span(n, vectors);
}

bool contains(const Subspace& a, const Vec& v) { return a.contains(v); }

bool is_subspace_of(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (a.dim() > b.dim()) return false;
    for (std::size_t r = 0; r < a.dim(); ++r)
        if (!b.contains(a.basis().row_vec(r))) return false;
    return true;
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    if (!is_subspace_of(b, a)) throw std::invalid_argument("quotient_dim: subspace is not nested");
    return a.dim() - b.dim();
}

Subspace image(const Mat& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("image: dimension mismatch");
    if (s.dim() == 0) return Subspace::zero(m.rows());
    return Subspace::column_space(m * s.basis().transpose());
}

Subspace preimage(const Mat& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw std::invalid_argument("preimage: dimension mismatch");
    const std::size_t n = m.cols();
    // m x = S^T beta  <=>  [m | -S^T] (x; beta) = 0
    const Mat stacked = s.dim() == 0 ? m : hstack(m, Rat(-1) * s.basis().transpose());
    std::vector<Vec> vectors;
    for (const Vec& k : kernel_vectors(stacked))
        vectors.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    return Subspace::span(n, vectors);
}

} // namespace eqcoh
