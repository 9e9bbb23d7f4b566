#include "eqcoh/random.hpp"

#include "eqcoh/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eqcoh::random {

Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
    return Rng(seq);
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range) {
    Mat m(rows, cols);
    std::uniform_int_distribution<int> dist(-range, range);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

Mat random_invertible(Rng& rng, std::size_t n, int range) {
    for (;;) {
        Mat m = random_matrix(rng, n, n, range);
        if (rank(m) == n) return m;
    }
}

Mat permutation_matrix(const Permutation& p) {
    Mat m(p.size(), p.size());
    for (std::size_t v = 0; v < p.size(); ++v) m(p[v], v) = 1;
    return m;
}

Permutation random_permutation(Rng& rng, std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Unit lower times unit upper triangular with entries in {-1, 0, 1}: integer
// inverse, so conjugation keeps entries rational with small denominators.
Mat random_unimodular(Rng& rng, std::size_t n) {
    Mat lower = Mat::identity(n);
    Mat upper = Mat::identity(n);
    std::uniform_int_distribution<int> dist(-1, 1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            lower(r, c) = dist(rng);
            upper(c, r) = dist(rng);
        }
    return lower * upper;
}

void set_block(Mat& dst, std::size_t row, std::size_t col, const Mat& src) {
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) dst(row + r, col + c) = src(r, c);
}

enum class Mode { Generic, KernelFixed, Shear, FiniteOrder };

struct Blocks {
    Mat a; // K -> K
    Mat b; // C -> K
    Mat d; // C -> C, and pi(U) -> pi(U)
    Mat e; // J -> pi(U)
    Mat f; // J -> J
};

Blocks generator_blocks(Rng& rng, Mode mode, std::size_t index, std::size_t m, std::size_t r, std::size_t q,
                        std::size_t d_total, int range) {
    Blocks g{Mat(m, m), Mat(m, r), Mat(r, r), Mat(r, q), Mat(q, q)};
    switch (mode) {
    case Mode::Generic:
        g.a = random_invertible(rng, m, range);
        g.b = random_matrix(rng, m, r, range);
        g.d = random_invertible(rng, r, range);
        g.e = random_matrix(rng, r, q, range);
        g.f = random_invertible(rng, q, range);
        break;
    case Mode::KernelFixed:
        g.a = Mat::identity(m);
        g.b = random_matrix(rng, m, r, range);
        g.d = random_invertible(rng, r, range);
        g.e = random_matrix(rng, r, q, range);
        g.f = random_invertible(rng, q, range);
        break;
    case Mode::Shear: {
        // C starts with period coordinates c_{j,k} (j < d_total, k < m) as far
        // as they fit; generator i sends c_{i,k} to c_{i,k} + u_k.
        g.a = Mat::identity(m);
        const std::size_t periods = std::min(r, d_total * m);
        g.d = Mat::identity(r);
        for (std::size_t p = 0; p < periods; ++p)
            if (p / std::max<std::size_t>(m, 1) == index) g.b(p % m, p) = 1;
        if (r > periods) {
            const std::size_t rest = r - periods;
            set_block(g.d, periods, periods, coin(rng, 0.5) ? Mat::identity(rest) : random_invertible(rng, rest, range));
            if (coin(rng, 0.3))
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t c = periods; c < r; ++c) g.b(k, c) = std::uniform_int_distribution<int>(-range, range)(rng);
        }
        g.f = Mat::identity(q);
        if (coin(rng, 0.3)) g.e = random_matrix(rng, r, q, range);
        break;
    }
    case Mode::FiniteOrder:
        g.a = permutation_matrix(random_permutation(rng, m));
        g.d = permutation_matrix(random_permutation(rng, r));
        g.f = permutation_matrix(random_permutation(rng, q));
        if (coin(rng, 0.3)) {
            // -1 on a coordinate keeps the order finite.
            if (m > 0) g.a(0, 0) = -g.a(0, 0);
            if (q > 0) g.f(q - 1, q - 1) = -g.f(q - 1, q - 1);
        }
        break;
    }
    return g;
}

std::optional<unsigned> finite_order(const Mat& gu, const Mat& gw, unsigned limit) {
    const Mat iu = Mat::identity(gu.rows());
    const Mat iw = Mat::identity(gw.rows());
    Mat pu = gu;
    Mat pw = gw;
    for (unsigned n = 1; n <= limit; ++n) {
        if (pu == iu && pw == iw) return n;
        pu = pu * gu;
        pw = pw * gw;
    }
    return std::nullopt;
}

} // namespace

LinearInstance random_instance(Rng& rng, const InstanceOptions& opts) {
    const auto mode = static_cast<Mode>(uniform(rng, 0, 3));
    std::size_t d = uniform(rng, coin(rng, 0.9) ? 1 : 0, opts.max_generators);
    std::size_t n = uniform(rng, 1, opts.max_dim);
    std::size_t m = uniform(rng, 0, n);
    // room for every period coordinate, so shears can reach dim = m d
    if (mode == Mode::Shear && d > 0 && opts.max_dim >= 2 && coin(rng, 0.7)) {
        d = std::min(d, opts.max_dim - 1);
        m = uniform(rng, 1, std::max<std::size_t>(1, opts.max_dim / (d + 1)));
        n = uniform(rng, m * (d + 1), opts.max_dim);
    }
    const std::size_t r = n - m;
    const std::size_t dim_w = uniform(rng, r, std::max(r, opts.max_dim));
    const std::size_t q = dim_w - r;
    const int range = opts.entry_range;

    // adapted coordinates: U = [K | C], W = [pi(U) | J], pi0 = [[0, I_r], [0, 0]]
    Mat pi0(dim_w, n);
    for (std::size_t i = 0; i < r; ++i) pi0(i, m + i) = 1;

    const Mat p = random_unimodular(rng, n);
    const Mat q_mat = random_unimodular(rng, dim_w);
    const Mat p_inv = *inverse(p);
    const Mat q_inv = *inverse(q_mat);

    LinearInstance inst;
    inst.dim_U = n;
    inst.dim_W = dim_w;
    inst.pi = q_mat * pi0 * p_inv;
    for (std::size_t i = 0; i < d; ++i) {
        // occasionally mix modes or repeat a generator
        const Mode gm = coin(rng, 0.15) ? static_cast<Mode>(uniform(rng, 0, 3)) : mode;
        if (i > 0 && coin(rng, 0.05)) {
            inst.generators.push_back(inst.generators[i - 1]);
            continue;
        }
        const Blocks b = generator_blocks(rng, gm, i, m, r, q, d, range);
        Mat gu(n, n);
        set_block(gu, 0, 0, b.a);
        set_block(gu, 0, m, b.b);
        set_block(gu, m, m, b.d);
        Mat gw(dim_w, dim_w);
        set_block(gw, 0, 0, b.d);
        set_block(gw, 0, r, b.e);
        set_block(gw, r, r, b.f);
        Generator g{p * gu * p_inv, q_mat * gw * q_inv, std::nullopt};
        if (gm == Mode::FiniteOrder && coin(rng, 0.8)) g.order = finite_order(g.on_U, g.on_W, 720);
        inst.generators.push_back(std::move(g));
    }
    ensure(validate(inst).ok(), "random instance generator produced an invalid instance");
    return inst;
}

Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
    const std::size_t n = uniform(rng, 0, max_vertices);
    const std::size_t ne = n == 0 ? 0 : uniform(rng, 0, max_edges);
    std::vector<Edge> edges;
    std::int64_t id = static_cast<std::int64_t>(uniform(rng, 0, 5));
    for (std::size_t i = 0; i < ne; ++i) {
        const std::size_t o = uniform(rng, 0, n - 1);
        std::size_t t = uniform(rng, 0, n - 1);
        if (coin(rng, 0.1)) t = o;
        if (i > 0 && coin(rng, 0.1)) { // parallel edge, possibly reversed
            const Edge& prev = edges[uniform(rng, 0, edges.size() - 1)];
            edges.push_back(coin(rng, 0.5) ? Edge{id, prev.o, prev.t} : Edge{id, prev.t, prev.o});
        } else {
            edges.push_back({id, o, t});
        }
        id += static_cast<std::int64_t>(uniform(rng, 1, 3));
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return Graph(n, std::move(edges));
}

fixtures::GraphFixture random_graph_action(Rng& rng, std::size_t max_vertices) {
    const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_vertices));
    GraphAction act;
    const std::size_t gens = uniform(rng, 1, 2);
    for (std::size_t i = 0; i < gens; ++i) act.generators.push_back(random_permutation(rng, n));
    const auto group = group_closure(n, act.generators);

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t seeds = uniform(rng, 0, n + 1);
    for (std::size_t s = 0; s < seeds; ++s) {
        const std::size_t o = uniform(rng, 0, n - 1);
        const std::size_t t = uniform(rng, 0, n - 1);
        for (const auto& g : group) pairs.insert({std::min(g[o], g[t]), std::max(g[o], g[t])});
    }
    std::vector<Edge> edges;
    std::int64_t id = 0;
    for (const auto& [a, b] : pairs) {
        if (coin(rng, 0.5))
            edges.push_back({id++, a, b});
        else
            edges.push_back({id++, b, a});
    }
    if (coin(rng, 0.5))
        for (auto p : act.generators) act.orders.emplace_back(permutation_order(p));
    return {Graph(n, std::move(edges)), std::move(act)};
}

Rat random_rat(Rng& rng, int range, int max_den) {
    const int num = std::uniform_int_distribution<int>(-range * max_den, range * max_den)(rng);
    const int den = std::uniform_int_distribution<int>(1, std::max(1, max_den))(rng);
    return Rat(BigInt(num), BigInt(den));
}

Vec random_combination(Rng& rng, const Subspace& s, int range) {
    Vec v(s.ambient_dim());
    for (const Vec& b : s.basis_vectors()) v = v + random_rat(rng, range, 2) * b;
    return v;
}

PeriodicDecomposition random_periodic_decomposition(Rng& rng, const PeriodicGraph& pg) {
    const auto comps = components(pg.quotient());
    PeriodicDecomposition dec;
    dec.coefficients.assign(pg.rank(), Vec(comps.size()));
    for (auto& row : dec.coefficients)
        for (auto& a : row) a = random_rat(rng, 5, 4);
    dec.potential.values.assign(pg.quotient().num_vertices(), Rat());
    for (const auto& comp : comps)
        for (std::size_t i = 1; i < comp.size(); ++i) dec.potential.values[comp[i]] = random_rat(rng, 5, 3);
    return dec;
}

} // namespace eqcoh::random
