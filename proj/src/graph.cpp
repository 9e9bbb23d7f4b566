#include "eqcoh/graph.hpp"

#include "eqcoh/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace eqcoh {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)), incident_(n_vertices) {
    std::unordered_set<std::int64_t> ids;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.o >= n_ || e.t >= n_)
            throw InputError("edge " + std::to_string(e.id) + " has an endpoint outside 0.." +
                             std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (!ids.insert(e.id).second) throw InputError("duplicate edge id " + std::to_string(e.id));
        incident_[e.o].push_back(i);
        if (e.t != e.o) incident_[e.t].push_back(i);
    }
}

std::optional<std::size_t> Graph::index_of(std::int64_t id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> Graph::loop_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].o == edges_[i].t) out.push_back(i);
    return out;
}

Mat coboundary(const Graph& g) {
    Mat m(g.num_edges(), g.num_vertices());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (e.o == e.t) continue;
        m(i, e.t) = 1;
        m(i, e.o) = -1;
    }
    return m;
}

SpanningForest spanning_forest(const Graph& g) {
    const std::size_t n = g.num_vertices();
    SpanningForest f;
    f.parent_edge.assign(n, std::nullopt);
    f.is_tree_edge.assign(g.num_edges(), false);
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            f.order.push_back(v);
            for (std::size_t ei : g.incidence()[v]) {
                const Edge& e = g.edge(ei);
                const std::size_t u = e.o == v ? e.t : e.o;
                if (seen[u]) continue;
                seen[u] = true;
                f.parent_edge[u] = ei;
                f.is_tree_edge[ei] = true;
                queue.push_back(u);
            }
        }
    }
    return f;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
    const auto comp = component_of(g);
    std::size_t count = 0;
    for (auto c : comp) count = std::max(count, c + 1);
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
    return out;
}

std::vector<std::size_t> component_of(const Graph& g) {
    const SpanningForest f = spanning_forest(g);
    std::vector<std::size_t> comp(g.num_vertices());
    std::size_t next = 0;
    for (std::size_t v : f.order) {
        if (!f.parent_edge[v]) {
            comp[v] = next++;
        } else {
            const Edge& e = g.edge(*f.parent_edge[v]);
            comp[v] = comp[e.o == v ? e.t : e.o];
        }
    }
    return comp;
}

std::vector<Cochain0> kernel_indicators(const Graph& g) {
    std::vector<Cochain0> out;
    for (const auto& comp : components(g)) {
        Cochain0 c{Vec(g.num_vertices())};
        for (auto v : comp) c.values[v] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<Cochain0> potential(const Graph& g, const Cochain1& w) {
    if (w.values.size() != g.num_edges()) throw InputError("1-cochain length does not match edge count");
    const SpanningForest forest = spanning_forest(g);
    Cochain0 f{Vec(g.num_vertices())};
    for (std::size_t v : forest.order) {
        if (!forest.parent_edge[v]) continue;
        const std::size_t ei = *forest.parent_edge[v];
        const Edge& e = g.edge(ei);
        // reached v from its parent along e
        if (e.t == v)
            f.values[v] = f.values[e.o] + w.values[ei];
        else
            f.values[v] = f.values[e.t] - w.values[ei];
    }
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (w.values[i] != f.values[e.t] - f.values[e.o]) return std::nullopt;
    }
    return f;
}

bool is_closed(const Graph& g, const Cochain1& w) { return potential(g, w).has_value(); }

std::optional<std::vector<EdgeImage>> edge_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.num_vertices()) return std::nullopt;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (std::size_t i = 0; i < g.num_edges(); ++i) by_pair[key(g.edge(i).o, g.edge(i).t)].push_back(i);

    std::vector<EdgeImage> out(g.num_edges());
    for (const auto& [pair, indices] : by_pair) {
        const auto target = by_pair.find(key(p[pair.first], p[pair.second]));
        if (target == by_pair.end() || target->second.size() != indices.size()) return std::nullopt;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            const Edge& src = g.edge(indices[k]);
            const std::size_t dst = target->second[k];
            const Edge& img = g.edge(dst);
            const bool reversed = !(img.o == p[src.o] && img.t == p[src.t]);
            out[indices[k]] = {dst, reversed};
        }
    }
    return out;
}

unsigned permutation_order(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    unsigned order = 1;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        unsigned len = 0;
        for (std::size_t v = s; !seen[v]; v = p[v]) {
            seen[v] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

std::vector<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& gens, std::size_t cap) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::set<Permutation> seen{id};
    std::vector<Permutation> out{id};
    for (std::size_t next = 0; next < out.size(); ++next) {
        for (const auto& g : gens) {
            Permutation y(n);
            for (std::size_t v = 0; v < n; ++v) y[v] = g[out[next][v]];
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw PreconditionError("group-too-large",
                                            "generated group exceeds the closure cap of " + std::to_string(cap));
                out.push_back(std::move(y));
            }
        }
    }
    return out;
}

void validate_action(const Graph& g, const GraphAction& act) {
    const std::size_t n = g.num_vertices();
    for (std::size_t i = 0; i < act.generators.size(); ++i) {
        const auto& p = act.generators[i];
        if (p.size() != n)
            throw InputError("generator " + std::to_string(i) + " has length " + std::to_string(p.size()) +
                             ", expected " + std::to_string(n));
        std::vector<bool> hit(n, false);
        for (auto v : p) {
            if (v >= n || hit[v]) throw InputError("generator " + std::to_string(i) + " is not a bijection");
            hit[v] = true;
        }
    }
    if (!act.orders.empty() && act.orders.size() != act.generators.size())
        throw InputError("orders must have one entry per generator");
}

ActionChecks action_checks(const Graph& g, const GraphAction& act, std::size_t cap) {
    validate_action(g, act);
    ActionChecks out;
    out.is_automorphism = std::all_of(act.generators.begin(), act.generators.end(),
                                      [&](const Permutation& p) { return edge_permutation(g, p).has_value(); });
    const auto group = group_closure(g.num_vertices(), act.generators, cap);
    out.group_order = group.size();
    const auto comp = component_of(g);
    out.is_free = true;
    out.is_closed_in_components = true;
    for (std::size_t e = 0; e < group.size(); ++e) {
        const auto& p = group[e];
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (e != 0 && p[v] == v) out.is_free = false; // group[0] is the identity
            if (comp[p[v]] != comp[v]) out.is_closed_in_components = false;
        }
    }
    return out;
}

LinearInstance to_instance(const Graph& g, const GraphAction& act) {
    validate_action(g, act);
    LinearInstance inst;
    inst.dim_U = g.num_vertices();
    inst.dim_W = g.num_edges();
    inst.pi = coboundary(g);
    for (std::size_t i = 0; i < act.generators.size(); ++i) {
        const auto& p = act.generators[i];
        const auto edges = edge_permutation(g, p);
        if (!edges)
            throw PreconditionError("not-automorphism",
                                    "generator " + std::to_string(i) + " does not map edges to edges");
        Generator gen{Mat(inst.dim_U, inst.dim_U), Mat(inst.dim_W, inst.dim_W), std::nullopt};
        for (std::size_t v = 0; v < p.size(); ++v) gen.on_U(p[v], v) = 1;
        for (std::size_t e = 0; e < edges->size(); ++e) gen.on_W((*edges)[e].index, e) = (*edges)[e].reversed ? -1 : 1;
        gen.order = (!act.orders.empty() && act.orders[i]) ? *act.orders[i] : permutation_order(p);
        inst.generators.push_back(std::move(gen));
    }
    for (const auto& gen : inst.generators)
        ensure(inst.pi * gen.on_U == gen.on_W * inst.pi, "graph automorphism instance is not equivariant");
    return inst;
}

bool GraphActionReport::consistent() const {
    return !iff.violation() && prediction_holds && iff.m == m &&
           component_indicators_invariant == iff.condition_i &&
           (!lemma_commutation || *lemma_commutation) && (!torsion || torsion->holds);
}

GraphActionReport analyze_graph_action(const Graph& g, const GraphAction& act, std::size_t cap) {
    GraphActionReport r;
    r.checks = action_checks(g, act, cap);
    const LinearInstance inst = to_instance(g, act);
    require_valid(inst);
    r.m = components(g).size();
    r.d = act.generators.size();
    r.iff = verify_iff(inst);
    r.component_indicators_invariant = r.checks.is_closed_in_components;
    if (r.iff.condition_i) {
        r.lemma_commutation = check_lemma_commutation(inst);
        r.torsion = check_torsion_trivial(inst);
    }
    r.predicted_dim = 0;
    r.prediction_holds = r.iff.dim == r.predicted_dim;
    r.notes.emplace_back("finite permutation group of order " + std::to_string(r.checks.group_order) +
                         ": its abelianization has rank 0, so the predicted quotient dimension is 0");
    if (r.d > 0 && r.m > 0)
        r.notes.emplace_back("hypothesis G = Z^d not satisfied: a finite group acts here, so dim = m d is "
                             "not attainable; the equality case is covered by periodic graphs");
    if (!r.checks.is_closed_in_components)
        r.notes.emplace_back("action exchanges connected components: component indicators are not invariant");
    return r;
}

} // namespace eqcoh
