#pragma once

#include "eqcoh/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqcoh {

struct Edge {
    std::int64_t id = 0;
    std::size_t o = 0; // origin
    std::size_t t = 0; // terminus
};

/// Symmetric directed graph stored with one orientation per geometric edge;
/// the reversed edge is implicit. Parallel edges and loops are allowed.
class Graph {
public:
    Graph() = default;
    /// Throws InputError on dangling endpoints or duplicate edge ids.
    Graph(std::size_t n_vertices, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const { return n_; }
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(std::size_t index) const { return edges_.at(index); }
    /// Position of the edge with the given id, or nullopt.
    [[nodiscard]] std::optional<std::size_t> index_of(std::int64_t id) const;
    [[nodiscard]] std::vector<std::size_t> loop_indices() const;

    /// Incident (edge index) lists, ordered by edge index.
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& incidence() const { return incident_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Function on vertices.
struct Cochain0 {
    Vec values;
};

/// Antisymmetric function on oriented edges, stored on the stored orientation.
struct Cochain1 {
    Vec values;

    /// Value on edge `index` traversed forwards or backwards: w(e-bar) = -w(e).
    [[nodiscard]] Rat on(std::size_t index, bool reversed) const {
        return reversed ? -values.at(index) : values.at(index);
    }
};

using Permutation = std::vector<std::size_t>;

struct GraphAction {
    std::vector<Permutation> generators;
    std::vector<std::optional<unsigned>> orders; // empty or one entry per generator
};

/// |E| x |V| matrix of f -> (e -> f(te) - f(oe)); loop rows are zero.
Mat coboundary(const Graph& g);

/// Connected components by BFS from the smallest unvisited vertex; each
/// component is sorted and components are ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> components(const Graph& g);
/// Component index of every vertex.
std::vector<std::size_t> component_of(const Graph& g);
std::vector<Cochain0> kernel_indicators(const Graph& g);

/// Spanning forest from BFS: for every vertex the edge used to reach it
/// (nullopt for roots), and the BFS visiting order.
struct SpanningForest {
    std::vector<std::optional<std::size_t>> parent_edge;
    std::vector<std::size_t> order;
    std::vector<bool> is_tree_edge;
};
SpanningForest spanning_forest(const Graph& g);

/// Potential with value 0 at each component's smallest vertex, or nullopt if
/// w is not closed (equivalently, not exact).
std::optional<Cochain0> potential(const Graph& g, const Cochain1& w);
bool is_closed(const Graph& g, const Cochain1& w);

/// Edge image of a vertex permutation: for every stored edge, the stored
/// edge it maps to and whether orientation flips. nullopt if the permutation
/// is not a graph automorphism.
struct EdgeImage {
    std::size_t index;
    bool reversed;
};
std::optional<std::vector<EdgeImage>> edge_permutation(const Graph& g, const Permutation& p);

/// Cycle-length lcm of a permutation.
unsigned permutation_order(const Permutation& p);

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// Every element of the group generated by `gens` (identity first, then BFS
/// over right multiplication by generators). Throws PreconditionError
/// ("group-too-large") if more than `cap` elements are found.
std::vector<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& gens,
                                       std::size_t cap = kDefaultGroupCap);

struct ActionChecks {
    bool is_automorphism = false;
    bool is_free = false;
    bool is_closed_in_components = false;
    std::size_t group_order = 0;
};

/// Throws InputError if a generator is not a bijection of the vertex set.
void validate_action(const Graph& g, const GraphAction& act);

ActionChecks action_checks(const Graph& g, const GraphAction& act, std::size_t cap = kDefaultGroupCap);

/// U = C^0, W = C^1, pi = coboundary, generators acting by permutation and
/// signed edge-permutation matrices. Throws PreconditionError
/// ("not-automorphism") if some generator does not preserve the edge set.
LinearInstance to_instance(const Graph& g, const GraphAction& act);

struct GraphActionReport {
    ActionChecks checks;
    std::size_t m = 0; // number of components
    std::size_t d = 0; // number of generators
    IffReport iff;
    bool component_indicators_invariant = false;
    std::optional<bool> lemma_commutation; // only under condition (i)
    std::optional<TorsionCheck> torsion;   // only under condition (i)
    std::size_t predicted_dim = 0;         // finite group: rank of abelianization is 0
    bool prediction_holds = false;
    std::vector<std::string> notes;

    [[nodiscard]] bool consistent() const;
};

GraphActionReport analyze_graph_action(const Graph& g, const GraphAction& act, std::size_t cap = kDefaultGroupCap);

} // namespace eqcoh
