#include <doctest.h>

#include "eqcoh/lattice.hpp"
#include "eqcoh/random.hpp"

using namespace eqcoh;

namespace {

IntMatrix times(const IntMatrix& a, const IntMatrix& b, std::size_t cols) {
    IntMatrix out;
    for (const auto& row : a) out.push_back(row_times(row, b, cols));
    return out;
}

BigInt det(IntMatrix m) {
    // Bareiss; m is square.
    const std::size_t n = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

TEST_CASE("hermite form of small lattices") {
    const Hermite h = hermite({int_vec({2, 0}), int_vec({0, 1})}, 2);
    CHECK(h.basis() == IntMatrix{int_vec({2, 0}), int_vec({0, 1})});
    REQUIRE(h.index());
    CHECK(*h.index() == 2);
    CHECK_FALSE(h.is_full());

    const Hermite g = hermite({int_vec({3, 5}), int_vec({2, 3})}, 2);
    CHECK(g.is_full());
    CHECK(g.basis() == IntMatrix{int_vec({1, 0}), int_vec({0, 1})});

    const Hermite r = hermite({int_vec({2, 0})}, 2);
    CHECK(r.rank() == 1);
    CHECK_FALSE(r.index());

    const Hermite e = hermite({}, 3);
    CHECK(e.rank() == 0);
    CHECK_FALSE(e.is_full());
}

TEST_CASE("hermite transform is unimodular and exact") {
    auto rng = random::stream(21, 0);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int i = 0; i < 200; ++i) {
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
        const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        IntMatrix m(rows, IntVec(cols));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        const Hermite h = hermite(m, cols);
        CHECK(times(h.transform, m, cols) == h.form);
        if (rows > 0) CHECK(abs(det(h.transform)) == 1);
        for (std::size_t k = 0; k < h.rank(); ++k) {
            const std::size_t p = h.pivots[k];
            CHECK(h.form[k][p] > 0);
            for (std::size_t above = 0; above < k; ++above) {
                CHECK(h.form[above][p] >= 0);
                CHECK(h.form[above][p] < h.form[k][p]);
            }
            if (k > 0) CHECK(h.pivots[k - 1] < p);
        }
        for (const auto& kv : h.left_kernel())
            for (const auto& x : row_times(kv, m, cols)) CHECK(x == 0);
        CHECK(h.left_kernel().size() == rows - h.rank());
    }
}

TEST_CASE("hermite basis depends only on the lattice") {
    auto rng = random::stream(22, 0);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 100; ++i) {
        IntMatrix m(3, IntVec(3));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        // a unimodular row operation and a redundant row leave the lattice unchanged
        IntMatrix n = m;
        for (std::size_t c = 0; c < 3; ++c) n[0][c] += 2 * n[1][c];
        std::swap(n[1], n[2]);
        IntVec extra(3);
        for (std::size_t c = 0; c < 3; ++c) extra[c] = n[0][c] - 3 * n[2][c];
        n.push_back(extra);
        CHECK(hermite(m, 3).basis() == hermite(n, 3).basis());
    }
}
