#include "eqcoh/json_io.hpp"

#include "eqcoh/errors.hpp"

#include <fstream>
#include <sstream>

namespace eqcoh::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected a JSON object with key '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
    return *it;
}

std::size_t nat_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::int64_t int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

} // namespace

Json parse(const std::string& text, const std::string& source_name) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source_name + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

void write_file(const std::string& path, const Json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << doc.dump(2) << "\n";
}

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    throw InputError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Vec vec_from_json(const Json& j, std::size_t expected_len) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    if (j.size() != expected_len)
        throw InputError("expected " + std::to_string(expected_len) + " entries, got " + std::to_string(j.size()));
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vec(r)));
    return out;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw InputError("expected a matrix with " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = vec_from_json(j[r], cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json to_json(const LinearInstance& inst) {
    Json out;
    out["dim_U"] = inst.dim_U;
    out["dim_W"] = inst.dim_W;
    out["pi"] = to_json(inst.pi);
    Json gens = Json::array();
    for (const auto& g : inst.generators) {
        Json jg;
        jg["gU"] = to_json(g.on_U);
        jg["gW"] = to_json(g.on_W);
        if (g.order) jg["order"] = *g.order;
        gens.push_back(std::move(jg));
    }
    out["generators"] = std::move(gens);
    return out;
}

LinearInstance instance_from_json(const Json& j) {
    LinearInstance inst;
    inst.dim_U = nat_from_json(field(j, "dim_U"), "dim_U");
    inst.dim_W = nat_from_json(field(j, "dim_W"), "dim_W");
    inst.pi = mat_from_json(field(j, "pi"), inst.dim_W, inst.dim_U);
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) throw InputError("'generators' must be an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        try {
            Generator g;
            g.on_U = mat_from_json(field(gens[i], "gU"), inst.dim_U, inst.dim_U);
            g.on_W = mat_from_json(field(gens[i], "gW"), inst.dim_W, inst.dim_W);
            if (gens[i].contains("order") && !gens[i]["order"].is_null()) {
                const std::size_t n = nat_from_json(gens[i]["order"], "order");
                if (n == 0) throw InputError("order must be >= 1");
                g.order = static_cast<unsigned>(n);
            }
            inst.generators.push_back(std::move(g));
        } catch (const InputError& e) {
            throw InputError("generator " + std::to_string(i) + ": " + e.what());
        }
    }
    return inst;
}

Json to_json(const Decomposition& dec) {
    Json out;
    Json a = Json::array();
    for (const auto& row : dec.coefficients) a.push_back(to_json(row));
    out["coefficients"] = std::move(a);
    out["invariant_part"] = to_json(dec.invariant_part);
    out["preimage"] = to_json(dec.preimage);
    out["target"] = to_json(dec.target);
    return out;
}

Json to_json(const Graph& g) {
    Json out;
    out["vertices"] = g.num_vertices();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json{{"id", e.id}, {"o", e.o}, {"t", e.t}});
    out["edges"] = std::move(edges);
    return out;
}

Graph graph_from_json(const Json& j) {
    const std::size_t n = nat_from_json(field(j, "vertices"), "vertices");
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw InputError("'edges' must be an array");
    std::vector<Edge> out;
    for (const auto& e : edges)
        out.push_back({int_from_json(field(e, "id"), "edge id"), nat_from_json(field(e, "o"), "edge origin"),
                       nat_from_json(field(e, "t"), "edge terminus")});
    return Graph(n, std::move(out));
}

Json to_json(const GraphAction& act) {
    Json out;
    out["generators"] = act.generators;
    if (!act.orders.empty()) {
        Json orders = Json::array();
        for (const auto& o : act.orders) orders.push_back(o ? Json(*o) : Json(nullptr));
        out["orders"] = std::move(orders);
    }
    return out;
}

GraphAction action_from_json(const Json& j) {
    GraphAction act;
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) throw InputError("'generators' must be an array of permutations");
    for (const auto& p : gens) {
        if (!p.is_array()) throw InputError("each generator must be an array of vertex ids");
        Permutation perm;
        for (const auto& v : p) perm.push_back(nat_from_json(v, "permutation entry"));
        act.generators.push_back(std::move(perm));
    }
    if (j.contains("orders") && !j["orders"].is_null()) {
        const Json& orders = j["orders"];
        if (!orders.is_array()) throw InputError("'orders' must be an array");
        for (const auto& o : orders) {
            if (o.is_null()) {
                act.orders.emplace_back(std::nullopt);
                continue;
            }
            const std::size_t n = nat_from_json(o, "order");
            if (n == 0) throw InputError("order must be >= 1");
            act.orders.emplace_back(static_cast<unsigned>(n));
        }
    }
    return act;
}

Json to_json(const PeriodicGraph& pg) {
    Json out = to_json(pg.quotient());
    out["d"] = pg.rank();
    Json volts = Json::object();
    for (std::size_t e = 0; e < pg.quotient().num_edges(); ++e)
        volts[std::to_string(pg.quotient().edge(e).id)] = pg.voltage(e);
    out["voltages"] = std::move(volts);
    return out;
}

PeriodicGraph periodic_from_json(const Json& j) {
    Graph g = graph_from_json(j);
    const std::size_t d = nat_from_json(field(j, "d"), "d");
    const Json& volts = field(j, "voltages");
    if (!volts.is_object()) throw InputError("'voltages' must be an object keyed by edge id");
    std::vector<std::vector<std::int64_t>> out(g.num_edges());
    std::vector<bool> seen(g.num_edges(), false);
    for (const auto& [key, value] : volts.items()) {
        std::int64_t id = 0;
        try {
            std::size_t used = 0;
            id = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InputError("voltage key '" + key + "' is not an edge id");
        }
        const auto idx = g.index_of(id);
        if (!idx) throw InputError("voltage given for unknown edge id " + key);
        if (!value.is_array()) throw InputError("voltage of edge " + key + " must be an integer array");
        for (const auto& x : value) out[*idx].push_back(int_from_json(x, "voltage entry"));
        seen[*idx] = true;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) throw InputError("missing voltage for edge id " + std::to_string(g.edge(e).id));
    return PeriodicGraph(d, std::move(g), std::move(out));
}

Cochain1 cochain1_from_json(const Json& j, const Graph& g) {
    if (j.is_object() && j.contains("w")) return cochain1_from_json(j["w"], g);
    if (j.is_array()) return {vec_from_json(j, g.num_edges())};
    if (!j.is_object()) throw InputError("1-cochain must be an array or an object keyed by edge id");
    Cochain1 w{Vec(g.num_edges())};
    std::vector<bool> seen(g.num_edges(), false);
    for (const auto& [key, value] : j.items()) {
        std::optional<std::size_t> idx;
        try {
            std::size_t used = 0;
            const auto id = std::stoll(key, &used);
            if (used == key.size()) idx = g.index_of(id);
        } catch (const std::exception&) {
        }
        if (!idx) throw InputError("1-cochain key '" + key + "' is not an edge id");
        w.values[*idx] = rat_from_json(value);
        seen[*idx] = true;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) throw InputError("1-cochain has no value for edge id " + std::to_string(g.edge(e).id));
    return w;
}

Json to_json(const Cochain1& w, const Graph& g) {
    Json out = Json::object();
    for (std::size_t e = 0; e < g.num_edges(); ++e) out[std::to_string(g.edge(e).id)] = to_json(w.values[e]);
    return out;
}

Json to_json(const Cochain0& f) { return to_json(f.values); }

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_si());
        out.push_back(std::move(r));
    }
    return out;
}

Json to_json(const PeriodicDecomposition& dec, const std::vector<PeriodLattice>& lattices, bool closed) {
    Json out;
    Json a = Json::array();
    for (const auto& row : dec.coefficients) a.push_back(to_json(row));
    out["a"] = std::move(a);
    out["f"] = to_json(dec.potential);
    Json lat = Json::array();
    for (const auto& l : lattices) {
        Json flat = Json::array();
        for (const auto& row : l.basis())
            for (const auto& x : row) flat.push_back(x.get_si());
        lat.push_back(std::move(flat));
    }
    out["certificate"] = Json{{"closed", closed}, {"lattices", std::move(lat)}};
    return out;
}

} // namespace eqcoh::io
