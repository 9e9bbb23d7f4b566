#pragma once

#include "eqcoh/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eqcoh {

/// One group generator acting on both U and W.
struct Generator {
    Mat on_U;
    Mat on_W;
    std::optional<unsigned> order; // declared finite order, if known
};

/// A linear map pi : U -> W together with a generating set of a group acting
/// on U and W by invertible matrices, with pi commuting with every generator.
struct LinearInstance {
    std::size_t dim_U = 0;
    std::size_t dim_W = 0;
    Mat pi; // dim_W x dim_U
    std::vector<Generator> generators;

    [[nodiscard]] std::size_t num_generators() const { return generators.size(); }
};

struct ValidationIssue {
    enum class Kind { Shape, NotInvertible, NotEquivariant, WrongOrder };
    Kind kind;
    std::optional<std::size_t> generator; // offending generator index
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    [[nodiscard]] bool ok() const { return issues.empty(); }
};

const char* to_string(ValidationIssue::Kind kind);

ValidationReport validate(const LinearInstance& inst);
/// Throws InputError listing every issue if `inst` is invalid.
void require_valid(const LinearInstance& inst);

/// The stacked map u -> ((g_1 - id)u, ..., (g_d - id)u), a (d*dim_U) x dim_U matrix.
Mat gbar_matrix(const LinearInstance& inst);

Subspace invariant_subspace_U(const LinearInstance& inst);
Subspace invariant_subspace_W(const LinearInstance& inst);
Subspace kernel_of_pi(const LinearInstance& inst);
/// {u : pi u ∈ W^G}.
Subspace invariant_preimage(const LinearInstance& inst);

struct QuotientResult {
    std::size_t dim = 0;
    Subspace invariant_image;       // pi(U) ∩ W^G
    Subspace image_of_invariants;   // pi(U^G)
};

/// Brute-force dim pi(U)^G / pi(U^G) straight from the subspace definitions.
QuotientResult oracle_quotient_dim(const LinearInstance& inst);

bool check_condition_i(const LinearInstance& inst);
bool check_condition_ii(const LinearInstance& inst);

using ConditionCheck = std::function<bool(const LinearInstance&)>;

struct IffReport {
    std::size_t dim = 0;
    std::size_t m = 0; // dim ker pi
    std::size_t d = 0; // number of generators
    bool condition_i = false;
    bool condition_ii = false;
    bool bound_holds = false;
    bool iff_holds = false;

    [[nodiscard]] std::size_t md() const { return m * d; }
    [[nodiscard]] bool violation() const { return !bound_holds || !iff_holds; }
};

/// Computes the oracle dimension and both conditions and cross-checks the
/// bound dim <= m d and the equivalence (dim == m d) <=> (i) and (ii).
/// `condition_ii` can be replaced to exercise the harness against a mutant.
IffReport verify_iff(const LinearInstance& inst, const ConditionCheck& condition_ii = check_condition_ii);

/// u_{j,k} indexed [j][k] with (g_i - id) u_{j,k} = delta_{ij} u_k.
using PeriodPreimages = std::vector<std::vector<Vec>>;

/// Requires `kernel_basis_choice` to be a basis of ker pi and condition (i).
/// Returns nullopt if some stacked system is inconsistent (condition (ii) fails).
std::optional<PeriodPreimages> find_ujk(const LinearInstance& inst, const std::vector<Vec>& kernel_basis_choice);

struct Decomposition {
    std::vector<Vec> coefficients; // [j][k], d x m
    Vec invariant_part;            // u ∈ U^G
    Vec preimage;                  // sum a_{j,k} u_{j,k} + u
    Vec target;                    // w
};

/// Error codes raised as PreconditionError::code() by decompose().
inline constexpr const char* kNotInImage = "not-in-image";
inline constexpr const char* kNotInvariant = "not-invariant";

/// Writes w ∈ pi(U)^G as pi(sum_{j,k} a_{j,k} u_{j,k} + u) with u ∈ U^G.
Decomposition decompose(const LinearInstance& inst, const Vec& w, const PeriodPreimages& ujk,
                        const std::vector<Vec>& kernel_basis_choice);

/// Checks g_i g_j u = g_j g_i u for all generator pairs on a basis of the
/// invariant preimage. Requires condition (i).
bool check_lemma_commutation(const LinearInstance& inst);

struct TorsionCheck {
    std::size_t generators_checked = 0; // 0 means vacuous
    bool holds = true;
    [[nodiscard]] bool vacuous() const { return generators_checked == 0; }
};

/// Every generator with a declared finite order must fix the invariant
/// preimage pointwise. Requires condition (i).
TorsionCheck check_torsion_trivial(const LinearInstance& inst);

} // namespace eqcoh
