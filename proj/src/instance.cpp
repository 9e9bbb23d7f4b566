#include "eqcoh/instance.hpp"

#include "eqcoh/errors.hpp"

#include <sstream>

namespace eqcoh {

const char* to_string(ValidationIssue::Kind kind) {
    switch (kind) {
    case ValidationIssue::Kind::Shape: return "shape";
    case ValidationIssue::Kind::NotInvertible: return "not-invertible";
    case ValidationIssue::Kind::NotEquivariant: return "not-equivariant";
    case ValidationIssue::Kind::WrongOrder: return "wrong-order";
    }
    return "unknown";
}

ValidationReport validate(const LinearInstance& inst) {
    using Kind = ValidationIssue::Kind;
    ValidationReport report;
    auto add = [&](Kind kind, std::optional<std::size_t> gen, std::string msg) {
        report.issues.push_back({kind, gen, std::move(msg)});
    };

    if (inst.pi.rows() != inst.dim_W || inst.pi.cols() != inst.dim_U) {
        std::ostringstream os;
        os << "pi is " << inst.pi.rows() << "x" << inst.pi.cols() << ", expected " << inst.dim_W << "x"
           << inst.dim_U;
        add(Kind::Shape, std::nullopt, os.str());
        return report;
    }

    for (std::size_t i = 0; i < inst.generators.size(); ++i) {
        const Generator& g = inst.generators[i];
        if (g.on_U.rows() != inst.dim_U || g.on_U.cols() != inst.dim_U) {
            add(Kind::Shape, i, "gU must be dim_U x dim_U");
            continue;
        }
        if (g.on_W.rows() != inst.dim_W || g.on_W.cols() != inst.dim_W) {
            add(Kind::Shape, i, "gW must be dim_W x dim_W");
            continue;
        }
        if (rank(g.on_U) != inst.dim_U) add(Kind::NotInvertible, i, "gU is singular");
        if (rank(g.on_W) != inst.dim_W) add(Kind::NotInvertible, i, "gW is singular");
        if (!(inst.pi * g.on_U == g.on_W * inst.pi)) add(Kind::NotEquivariant, i, "pi * gU != gW * pi");
        if (g.order) {
            if (*g.order == 0) {
                add(Kind::WrongOrder, i, "declared order must be >= 1");
            } else {
                if (power(g.on_U, *g.order) != Mat::identity(inst.dim_U))
                    add(Kind::WrongOrder, i, "gU^" + std::to_string(*g.order) + " != id");
                if (power(g.on_W, *g.order) != Mat::identity(inst.dim_W))
                    add(Kind::WrongOrder, i, "gW^" + std::to_string(*g.order) + " != id");
            }
        }
    }
    return report;
}

void require_valid(const LinearInstance& inst) {
    const ValidationReport report = validate(inst);
    if (report.ok()) return;
    std::ostringstream os;
    os << "invalid instance:";
    for (const auto& issue : report.issues) {
        os << " [" << to_string(issue.kind);
        if (issue.generator) os << " @generator " << *issue.generator;
        os << ": " << issue.message << "]";
    }
    throw InputError(os.str());
}

Mat gbar_matrix(const LinearInstance& inst) {
    const std::size_t n = inst.dim_U;
    Mat g(inst.generators.size() * n, n);
    for (std::size_t i = 0; i < inst.generators.size(); ++i) {
        const Mat& gu = inst.generators[i].on_U;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) g(i * n + r, c) = gu(r, c) - (r == c ? Rat(1) : Rat(0));
    }
    return g;
}

namespace {

template <class Select>
Subspace fixed_subspace(const LinearInstance& inst, std::size_t n, Select select) {
    Mat stacked(0, n);
    for (const auto& g : inst.generators) stacked = vstack(stacked, select(g) - Mat::identity(n));
    if (stacked.rows() == 0) return Subspace::full(n);
    return kernel_basis(stacked);
}

void require_condition_i(const LinearInstance& inst) {
    if (!check_condition_i(inst))
        throw PreconditionError("condition-i", "condition (i) fails: ker pi is not contained in U^G");
}

} // namespace

Subspace invariant_subspace_U(const LinearInstance& inst) {
    return fixed_subspace(inst, inst.dim_U, [](const Generator& g) -> const Mat& { return g.on_U; });
}

Subspace invariant_subspace_W(const LinearInstance& inst) {
    return fixed_subspace(inst, inst.dim_W, [](const Generator& g) -> const Mat& { return g.on_W; });
}

Subspace kernel_of_pi(const LinearInstance& inst) { return kernel_basis(inst.pi); }

Subspace invariant_preimage(const LinearInstance& inst) { return preimage(inst.pi, invariant_subspace_W(inst)); }

QuotientResult oracle_quotient_dim(const LinearInstance& inst) {
    QuotientResult out;
    const Subspace image_pi = Subspace::column_space(inst.pi);
    out.invariant_image = intersect(image_pi, invariant_subspace_W(inst));
    out.image_of_invariants = image(inst.pi, invariant_subspace_U(inst));
    ensure(is_subspace_of(out.image_of_invariants, out.invariant_image),
           "pi(U^G) is not contained in pi(U)^G; the instance is not equivariant");
    out.dim = quotient_dim(out.invariant_image, out.image_of_invariants);
    return out;
}

bool check_condition_i(const LinearInstance& inst) {
    return is_subspace_of(kernel_of_pi(inst), invariant_subspace_U(inst));
}

bool check_condition_ii(const LinearInstance& inst) {
    const std::size_t n = inst.dim_U;
    const std::size_t d = inst.generators.size();
    const Subspace reach = Subspace::column_space(gbar_matrix(inst));
    for (const Vec& k : kernel_of_pi(inst).basis_vectors()) {
        for (std::size_t slot = 0; slot < d; ++slot) {
            Vec v(d * n);
            for (std::size_t c = 0; c < n; ++c) v[slot * n + c] = k[c];
            if (!reach.contains(v)) return false;
        }
    }
    return true;
}

IffReport verify_iff(const LinearInstance& inst, const ConditionCheck& condition_ii) {
    IffReport r;
    r.dim = oracle_quotient_dim(inst).dim;
    r.m = kernel_of_pi(inst).dim();
    r.d = inst.generators.size();
    r.condition_i = check_condition_i(inst);
    r.condition_ii = condition_ii(inst);
    r.bound_holds = r.dim <= r.md();
    r.iff_holds = (r.dim == r.md()) == (r.condition_i && r.condition_ii);
    return r;
}

namespace {

void require_kernel_basis(const LinearInstance& inst, const std::vector<Vec>& basis) {
    const Subspace ker = kernel_of_pi(inst);
    if (basis.size() != ker.dim())
        throw PreconditionError("bad-kernel-basis", "kernel basis has " + std::to_string(basis.size()) +
                                                        " vectors, ker pi has dimension " +
                                                        std::to_string(ker.dim()));
    for (const Vec& v : basis) {
        if (v.size() != inst.dim_U) throw InputError("kernel basis vector has wrong length");
        if (!is_zero(inst.pi * v)) throw PreconditionError("bad-kernel-basis", "vector is not in ker pi");
    }
    if (Subspace::span(inst.dim_U, basis).dim() != basis.size())
        throw PreconditionError("bad-kernel-basis", "kernel basis vectors are linearly dependent");
}

Vec slot_vector(std::size_t d, std::size_t n, std::size_t slot, const Vec& v) {
    Vec out(d * n);
    for (std::size_t c = 0; c < n; ++c) out[slot * n + c] = v[c];
    return out;
}

} // namespace

std::optional<PeriodPreimages> find_ujk(const LinearInstance& inst, const std::vector<Vec>& kernel_basis_choice) {
    require_kernel_basis(inst, kernel_basis_choice);
    require_condition_i(inst);
    const std::size_t n = inst.dim_U;
    const std::size_t d = inst.generators.size();
    const Mat gbar = gbar_matrix(inst);
    PeriodPreimages out(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (const Vec& uk : kernel_basis_choice) {
            auto x = solve(gbar, slot_vector(d, n, j, uk));
            if (!x) return std::nullopt;
            out[j].push_back(std::move(*x));
        }
    }
    return out;
}

Decomposition decompose(const LinearInstance& inst, const Vec& w, const PeriodPreimages& ujk,
                        const std::vector<Vec>& kernel_basis_choice) {
    if (w.size() != inst.dim_W) throw InputError("w has wrong length");
    require_kernel_basis(inst, kernel_basis_choice);
    require_condition_i(inst);

    const std::size_t n = inst.dim_U;
    const std::size_t d = inst.generators.size();
    const std::size_t m = kernel_basis_choice.size();
    const Mat gbar = gbar_matrix(inst);

    if (ujk.size() != d) throw InputError("u_{j,k} array has wrong number of rows");
    for (std::size_t j = 0; j < d; ++j) {
        if (ujk[j].size() != m) throw InputError("u_{j,k} array has wrong number of columns");
        for (std::size_t k = 0; k < m; ++k)
            if (gbar * ujk[j][k] != slot_vector(d, n, j, kernel_basis_choice[k]))
                throw PreconditionError("bad-ujk", "u_{" + std::to_string(j) + "," + std::to_string(k) +
                                                       "} does not satisfy (g_i - id)u = delta_ij u_k");
    }

    auto u0 = solve(inst.pi, w);
    if (!u0) throw PreconditionError(kNotInImage, "w is not in the image of pi");
    for (std::size_t i = 0; i < d; ++i)
        if (inst.generators[i].on_W * w != w)
            throw PreconditionError(kNotInvariant, "w is not fixed by generator " + std::to_string(i));

    // g-bar u0 lies in (ker pi)^d; express it in the basis {g-bar u_{j,k}}.
    std::vector<Vec> columns;
    columns.reserve(d * m);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < m; ++k) columns.push_back(gbar * ujk[j][k]);
    const Vec target = gbar * *u0;
    Vec flat(d * m);
    if (!columns.empty()) {
        auto a = solve(Mat::from_columns(d * n, columns), target);
        ensure(a.has_value(), "g-bar u0 is not in the span of g-bar u_{j,k}");
        flat = std::move(*a);
    } else {
        ensure(is_zero(target), "g-bar u0 is nonzero with an empty period basis");
    }

    Decomposition out;
    out.target = w;
    out.coefficients.assign(d, Vec(m));
    Vec periodic = zeros(n);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            out.coefficients[j][k] = flat[j * m + k];
            periodic = periodic + flat[j * m + k] * ujk[j][k];
        }
    out.invariant_part = *u0 - periodic;
    out.preimage = periodic + out.invariant_part;

    ensure(is_zero(gbar * out.invariant_part), "invariant part is not fixed by the generators");
    ensure(inst.pi * out.preimage == w, "decomposition does not reconstruct w");
    return out;
}

bool check_lemma_commutation(const LinearInstance& inst) {
    require_condition_i(inst);
    const auto basis = invariant_preimage(inst).basis_vectors();
    const auto& gens = inst.generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            for (const Vec& u : basis)
                if (gens[i].on_U * (gens[j].on_U * u) != gens[j].on_U * (gens[i].on_U * u)) return false;
    return true;
}

TorsionCheck check_torsion_trivial(const LinearInstance& inst) {
    require_condition_i(inst);
    TorsionCheck out;
    const auto basis = invariant_preimage(inst).basis_vectors();
    for (const auto& g : inst.generators) {
        if (!g.order) continue;
        ++out.generators_checked;
        for (const Vec& u : basis)
            if (g.on_U * u != u) out.holds = false;
    }
    return out;
}

} // namespace eqcoh
