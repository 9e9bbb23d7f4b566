#include "eqcoh/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace eqcoh {

namespace {

// Rows r and i of both matrices replaced by (a*Rr + b*Ri, c*Rr + d*Ri).
void combine(IntMatrix& m, std::size_t r, std::size_t i, const BigInt& a, const BigInt& b, const BigInt& c,
             const BigInt& d) {
    for (std::size_t k = 0; k < m[r].size(); ++k) {
        BigInt x = a * m[r][k] + b * m[i][k];
        BigInt y = c * m[r][k] + d * m[i][k];
        m[r][k] = std::move(x);
        m[i][k] = std::move(y);
    }
}

void add_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= q * m[src][k];
}

void negate(IntMatrix& m, std::size_t r) {
    for (auto& x : m[r]) x = -x;
}

} // namespace

Hermite hermite(const IntMatrix& rows, std::size_t cols) {
    const std::size_t n = rows.size();
    Hermite h;
    h.cols = cols;
    h.form = rows;
    for (const auto& row : rows)
        if (row.size() != cols) throw std::invalid_argument("hermite: ragged integer matrix");
    h.transform.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) h.transform[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        for (std::size_t i = r + 1; i < n; ++i) {
            if (h.form[i][c] == 0) continue;
            const BigInt a = h.form[r][c];
            const BigInt b = h.form[i][c];
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const BigInt a_g = a / g;
            const BigInt b_g = b / g;
            // [[s, t], [-b/g, a/g]] has determinant 1
            combine(h.form, r, i, s, t, -b_g, a_g);
            combine(h.transform, r, i, s, t, -b_g, a_g);
        }
        if (h.form[r][c] == 0) continue;
        if (h.form[r][c] < 0) {
            negate(h.form, r);
            negate(h.transform, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), h.form[i][c].get_mpz_t(), h.form[r][c].get_mpz_t());
            if (q == 0) continue;
            add_multiple(h.form, i, r, q);
            add_multiple(h.transform, i, r, q);
        }
        h.pivots.push_back(c);
        ++r;
    }
    return h;
}

IntMatrix Hermite::basis() const { return {form.begin(), form.begin() + static_cast<std::ptrdiff_t>(rank())}; }

IntMatrix Hermite::left_kernel() const {
    return {transform.begin() + static_cast<std::ptrdiff_t>(rank()), transform.end()};
}

std::optional<BigInt> Hermite::index() const {
    if (rank() != cols) return std::nullopt;
    BigInt det = 1;
    for (std::size_t r = 0; r < rank(); ++r) det *= form[r][pivots[r]];
    return det;
}

bool Hermite::is_full() const {
    const auto idx = index();
    return idx && *idx == 1;
}

IntVec int_vec(const std::vector<std::int64_t>& v) {
    IntVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

IntVec row_times(const IntVec& coeffs, const IntMatrix& m, std::size_t cols) {
    if (coeffs.size() != m.size()) throw std::invalid_argument("row_times: length mismatch");
    IntVec out(cols, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t c = 0; c < cols; ++c) out[c] += coeffs[i] * m[i][c];
    }
    return out;
}

} // namespace eqcoh
