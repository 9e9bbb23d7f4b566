#include "eqcoh/periodic.hpp"

#include "eqcoh/errors.hpp"
#include "eqcoh/linalg.hpp"

#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqcoh {

PeriodicGraph::PeriodicGraph(std::size_t d, Graph quotient, std::vector<std::vector<std::int64_t>> voltages)
    : d_(d), quotient_(std::move(quotient)), voltages_(std::move(voltages)) {
    if (voltages_.size() != quotient_.num_edges())
        throw InputError("expected one voltage per quotient edge (" + std::to_string(quotient_.num_edges()) +
                         "), got " + std::to_string(voltages_.size()));
    for (std::size_t i = 0; i < voltages_.size(); ++i)
        if (voltages_[i].size() != d_)
            throw InputError("voltage of edge " + std::to_string(quotient_.edge(i).id) + " has length " +
                             std::to_string(voltages_[i].size()) + ", expected d = " + std::to_string(d_));
}

CycleStructure cycle_structure(const PeriodicGraph& pg) {
    const Graph& g = pg.quotient();
    const std::size_t d = pg.rank();
    const std::size_t ne = g.num_edges();
    const SpanningForest forest = spanning_forest(g);

    CycleStructure cs;
    cs.component_of = component_of(g);
    cs.components = components(g);
    cs.cycles.resize(cs.components.size());

    // Tree path from the component root to each vertex: edge coefficients and voltage.
    std::vector<std::vector<std::int64_t>> path(g.num_vertices(), std::vector<std::int64_t>(ne, 0));
    std::vector<IntVec> tau(g.num_vertices(), IntVec(d, 0));
    for (std::size_t v : forest.order) {
        if (!forest.parent_edge[v]) continue;
        const std::size_t ei = *forest.parent_edge[v];
        const Edge& e = g.edge(ei);
        const bool forward = e.t == v;
        const std::size_t from = forward ? e.o : e.t;
        path[v] = path[from];
        path[v][ei] += forward ? 1 : -1;
        for (std::size_t j = 0; j < d; ++j) {
            const BigInt t(static_cast<long>(pg.voltage(ei)[j]));
            tau[v][j] = tau[from][j];
            if (forward)
                tau[v][j] += t;
            else
                tau[v][j] -= t;
        }
    }

    for (std::size_t ei = 0; ei < ne; ++ei) {
        if (forest.is_tree_edge[ei]) continue;
        const Edge& e = g.edge(ei);
        FundamentalCycle c;
        c.edge = ei;
        c.coefficients.assign(ne, 0);
        for (std::size_t k = 0; k < ne; ++k) c.coefficients[k] = path[e.o][k] - path[e.t][k];
        c.coefficients[ei] += 1;
        c.voltage.resize(d);
        for (std::size_t j = 0; j < d; ++j)
            c.voltage[j] = tau[e.o][j] + BigInt(static_cast<long>(pg.voltage(ei)[j])) - tau[e.t][j];
        cs.cycles[cs.component_of[e.o]].push_back(std::move(c));
    }
    return cs;
}

namespace {

IntMatrix voltage_rows(const std::vector<FundamentalCycle>& cycles) {
    IntMatrix rows;
    rows.reserve(cycles.size());
    for (const auto& c : cycles) rows.push_back(c.voltage);
    return rows;
}

Rat cycle_sum(const FundamentalCycle& c, const Cochain1& w) {
    Rat s;
    for (std::size_t e = 0; e < c.coefficients.size(); ++e)
        if (c.coefficients[e] != 0) s += Rat(c.coefficients[e]) * w.values[e];
    return s;
}

Rat combination_sum(const IntVec& z, const std::vector<Rat>& sums) {
    Rat s;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) s += Rat(z[i]) * sums[i];
    return s;
}

std::vector<PeriodLattice> lattices_of(const PeriodicGraph& pg, const CycleStructure& cs) {
    std::vector<PeriodLattice> out;
    out.reserve(cs.cycles.size());
    for (const auto& cycles : cs.cycles) out.push_back({hermite(voltage_rows(cycles), pg.rank())});
    return out;
}

bool closed_on_lift(const CycleStructure& cs, const std::vector<PeriodLattice>& lattices, const Cochain1& w,
                    std::string* why) {
    for (std::size_t k = 0; k < cs.cycles.size(); ++k) {
        std::vector<Rat> sums;
        for (const auto& c : cs.cycles[k]) sums.push_back(cycle_sum(c, w));
        for (const IntVec& z : lattices[k].hermite.left_kernel()) {
            if (combination_sum(z, sums).is_zero()) continue;
            if (why) {
                std::ostringstream os;
                os << "w is not closed on the lift: a zero-voltage cycle combination in component " << k
                   << " has nonzero sum";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

void require_length(const PeriodicGraph& pg, const Cochain1& w) {
    if (w.values.size() != pg.quotient().num_edges())
        throw InputError("1-form has " + std::to_string(w.values.size()) + " values, quotient has " +
                         std::to_string(pg.quotient().num_edges()) + " edges");
}

} // namespace

std::vector<PeriodLattice> period_lattices(const PeriodicGraph& pg) { return lattices_of(pg, cycle_structure(pg)); }

bool action_is_closed(const PeriodicGraph& pg) {
    for (const auto& l : period_lattices(pg))
        if (!l.is_full()) return false;
    return true;
}

std::vector<std::optional<BigInt>> lift_component_counts(const PeriodicGraph& pg) {
    std::vector<std::optional<BigInt>> out;
    for (const auto& l : period_lattices(pg)) out.push_back(l.hermite.index());
    return out;
}

std::optional<BigInt> lift_component_count(const PeriodicGraph& pg) {
    BigInt total = 0;
    for (const auto& c : lift_component_counts(pg)) {
        if (!c) return std::nullopt;
        total += *c;
    }
    return total;
}

bool is_invariant_closed(const PeriodicGraph& pg, const Cochain1& w) {
    require_length(pg, w);
    const CycleStructure cs = cycle_structure(pg);
    return closed_on_lift(cs, lattices_of(pg, cs), w, nullptr);
}

Cochain1 reconstruct(const PeriodicGraph& pg, const PeriodicDecomposition& dec) {
    const Graph& g = pg.quotient();
    const auto comp = component_of(g);
    Cochain1 w{Vec(g.num_edges())};
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        Rat v = dec.potential.values.at(e.t) - dec.potential.values.at(e.o);
        for (std::size_t j = 0; j < pg.rank(); ++j)
            if (pg.voltage(i)[j] != 0) v += dec.coefficients.at(j).at(comp[e.o]) * Rat(pg.voltage(i)[j]);
        w.values[i] = v;
    }
    return w;
}

PeriodicDecomposition decompose_periodic(const PeriodicGraph& pg, const Cochain1& w) {
    require_length(pg, w);
    const std::size_t d = pg.rank();
    const Graph& g = pg.quotient();
    const CycleStructure cs = cycle_structure(pg);
    const auto lattices = lattices_of(pg, cs);
    const std::size_t m = cs.components.size();

    for (std::size_t k = 0; k < m; ++k) {
        const Hermite& h = lattices[k].hermite;
        if (h.is_full()) continue;
        std::ostringstream os;
        os << "period lattice not full: ";
        if (h.rank() < d)
            os << "rank " << h.rank() << " of " << d;
        else
            os << "index " << h.index()->get_str() << " in Z^" << d;
        if (m > 1) os << " (component " << k << ")";
        throw PreconditionError("period-lattice-not-full", os.str());
    }
    std::string why;
    if (!closed_on_lift(cs, lattices, w, &why)) throw PreconditionError("not-closed", why);

    PeriodicDecomposition dec;
    dec.coefficients.assign(d, Vec(m));
    for (std::size_t k = 0; k < m; ++k) {
        const Hermite& h = lattices[k].hermite;
        const auto& cycles = cs.cycles[k];
        std::vector<Rat> sums;
        for (const auto& c : cycles) sums.push_back(cycle_sum(c, w));
        const IntMatrix kernel = h.left_kernel();
        const IntMatrix volts = voltage_rows(cycles);
        for (std::size_t j = 0; j < d; ++j) {
            // Full lattice: the HNF is the identity, so transform row j is a
            // cycle combination with total voltage e_j.
            const IntVec& z = h.transform[j];
            IntVec e_j(d, 0);
            e_j[j] = 1;
            ensure(row_times(z, volts, d) == e_j, "HNF transform row does not realize e_j");
            dec.coefficients[j][k] = combination_sum(z, sums);
            if (!kernel.empty()) {
                IntVec alt = z;
                for (std::size_t i = 0; i < alt.size(); ++i) alt[i] += kernel.front()[i];
                ensure(row_times(alt, volts, d) == e_j, "alternative cycle does not realize e_j");
                ensure(combination_sum(alt, sums) == dec.coefficients[j][k],
                       "period coefficient depends on the choice of cycle");
            }
        }
    }

    Cochain1 residual = w;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const std::size_t k = cs.component_of[g.edge(i).o];
        for (std::size_t j = 0; j < d; ++j)
            if (pg.voltage(i)[j] != 0) residual.values[i] -= dec.coefficients[j][k] * Rat(pg.voltage(i)[j]);
    }
    auto f = potential(g, residual);
    ensure(f.has_value(), "residual 1-form is not exact on the quotient");
    dec.potential = std::move(*f);
    ensure(reconstruct(pg, dec).values == w.values, "periodic decomposition does not reconstruct w");
    return dec;
}

PeriodicGraph change_generators(const PeriodicGraph& pg, const std::vector<std::vector<std::int64_t>>& basis) {
    const std::size_t d = pg.rank();
    IntMatrix b;
    for (const auto& row : basis) {
        if (row.size() != d) throw InputError("generator basis must be d x d");
        b.push_back(int_vec(row));
    }
    if (b.size() != d) throw InputError("generator basis must be d x d");
    if (!hermite(b, d).is_full()) throw InputError("generator basis is not unimodular");

    // t = B^T t'  =>  t' = B^{-T} t
    Mat bt(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) bt(j, i) = Rat(basis[i][j]);
    std::vector<std::vector<std::int64_t>> volts;
    for (std::size_t e = 0; e < pg.quotient().num_edges(); ++e) {
        Vec t(d);
        for (std::size_t j = 0; j < d; ++j) t[j] = Rat(pg.voltage(e)[j]);
        auto tp = solve(bt, t);
        ensure(tp.has_value(), "unimodular basis is singular");
        std::vector<std::int64_t> row;
        for (const Rat& x : *tp) {
            ensure(x.is_integer() && x.num().fits_slong_p(), "re-expressed voltage is not a machine integer");
            row.push_back(x.num().get_si());
        }
        volts.push_back(std::move(row));
    }
    return {d, pg.quotient(), std::move(volts)};
}

std::vector<Vec> period_generator_forms(const PeriodicGraph& pg) {
    const Graph& g = pg.quotient();
    const auto comp = component_of(g);
    const std::size_t m = components(g).size();
    std::vector<Vec> out;
    for (std::size_t j = 0; j < pg.rank(); ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vec form(g.num_edges());
            for (std::size_t e = 0; e < g.num_edges(); ++e)
                if (comp[g.edge(e).o] == k) form[e] = Rat(pg.voltage(e)[j]);
            out.push_back(std::move(form));
        }
    return out;
}

std::size_t realized_period_dim(const PeriodicGraph& pg) {
    const std::size_t ne = pg.quotient().num_edges();
    const Subspace exact = Subspace::column_space(coboundary(pg.quotient()));
    const Subspace with_periods = sum(exact, Subspace::span(ne, period_generator_forms(pg)));
    return quotient_dim(with_periods, exact);
}

std::size_t closed_quotient_dim(const PeriodicGraph& pg) {
    const std::size_t ne = pg.quotient().num_edges();
    const CycleStructure cs = cycle_structure(pg);
    const auto lattices = lattices_of(pg, cs);
    std::vector<Vec> conditions;
    for (std::size_t k = 0; k < cs.cycles.size(); ++k) {
        for (const IntVec& z : lattices[k].hermite.left_kernel()) {
            Vec row(ne);
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::size_t e = 0; e < ne; ++e)
                    row[e] += Rat(z[i]) * Rat(cs.cycles[k][i].coefficients[e]);
            conditions.push_back(std::move(row));
        }
    }
    const Subspace closed = conditions.empty() ? Subspace::full(ne) : kernel_basis(Mat::from_rows(ne, conditions));
    return quotient_dim(closed, Subspace::column_space(coboundary(pg.quotient())));
}

// ---------------------------------------------------------------------------
// Truncation oracle

namespace {

class LiftWindow {
public:
    LiftWindow(const PeriodicGraph& pg, const Cochain1& w, const PeriodicDecomposition& dec, std::size_t radius)
        : pg_(pg), w_(w), dec_(dec), radius_(static_cast<std::int64_t>(radius)),
          comp_(component_of(pg.quotient())) {
        require_length(pg, w);
        cells_ = 1;
        for (std::size_t j = 0; j < pg.rank(); ++j) cells_ *= 2 * radius + 1;
    }

    [[nodiscard]] std::size_t cells() const { return cells_; }
    [[nodiscard]] std::size_t edges() const { return pg_.quotient().num_edges(); }

    [[nodiscard]] std::vector<std::int64_t> cell(std::size_t index) const {
        std::vector<std::int64_t> b(pg_.rank());
        const std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
        for (std::size_t j = 0; j < b.size(); ++j) {
            b[j] = static_cast<std::int64_t>(index % side) - radius_;
            index /= side;
        }
        return b;
    }

    [[nodiscard]] Rat lifted(std::size_t v, const std::vector<std::int64_t>& b) const {
        Rat f = dec_.potential.values[v];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) f += dec_.coefficients[j][comp_[v]] * Rat(b[j]);
        return f;
    }

    [[nodiscard]] bool check(const std::vector<std::int64_t>& b, std::size_t ei) const {
        const Edge& e = pg_.quotient().edge(ei);
        std::vector<std::int64_t> bt = b;
        for (std::size_t j = 0; j < bt.size(); ++j) bt[j] += pg_.voltage(ei)[j];
        return w_.values[ei] == lifted(e.t, bt) - lifted(e.o, b);
    }

    [[nodiscard]] std::string describe(std::size_t cell_index, std::size_t ei) const {
        std::ostringstream os;
        os << "edge " << pg_.quotient().edge(ei).id << " at cell (";
        const auto b = cell(cell_index);
        for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
        os << ")";
        return os.str();
    }

private:
    const PeriodicGraph& pg_;
    const Cochain1& w_;
    const PeriodicDecomposition& dec_;
    std::int64_t radius_;
    std::vector<std::size_t> comp_;
    std::size_t cells_ = 1;
};

TruncationReport finish(const LiftWindow& win, std::size_t radius, std::size_t mismatches, std::size_t first) {
    TruncationReport r;
    r.radius = radius;
    r.cells = win.cells();
    r.checks = win.cells() * win.edges();
    r.mismatches = mismatches;
    if (mismatches > 0) r.first_mismatch = win.describe(first / win.edges(), first % win.edges());
    return r;
}

} // namespace

TruncationReport truncation_oracle_serial(const PeriodicGraph& pg, const Cochain1& w,
                                          const PeriodicDecomposition& dec, std::size_t radius) {
    const LiftWindow win(pg, w, dec, radius);
    std::size_t mismatches = 0;
    std::size_t first = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < win.cells(); ++c) {
        const auto b = win.cell(c);
        for (std::size_t e = 0; e < win.edges(); ++e) {
            if (win.check(b, e)) continue;
            ++mismatches;
            first = std::min(first, c * win.edges() + e);
        }
    }
    return finish(win, radius, mismatches, first);
}

TruncationReport truncation_oracle(const PeriodicGraph& pg, const Cochain1& w, const PeriodicDecomposition& dec,
                                   std::size_t radius) {
    const LiftWindow win(pg, w, dec, radius);
    const auto cells = static_cast<std::int64_t>(win.cells());
    const std::size_t ne = win.edges();
    std::size_t mismatches = 0;
    std::size_t first = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(static) reduction(+ : mismatches) reduction(min : first)
    for (std::int64_t c = 0; c < cells; ++c) {
        const auto cell_index = static_cast<std::size_t>(c);
        const auto b = win.cell(cell_index);
        for (std::size_t e = 0; e < ne; ++e) {
            if (win.check(b, e)) continue;
            ++mismatches;
            first = std::min(first, cell_index * ne + e);
        }
    }
    return finish(win, radius, mismatches, first);
}

} // namespace eqcoh
