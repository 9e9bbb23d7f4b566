#pragma once

#include "eqcoh/instance.hpp"
#include "eqcoh/periodic.hpp"

#include <json.hpp>

#include <string>

namespace eqcoh::io {

// Ordered so that emitted documents keep insertion order and are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses text, converting syntax errors into InputError with the byte offset.
Json parse(const std::string& text, const std::string& source_name);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t expected_len);
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json to_json(const LinearInstance& inst);
LinearInstance instance_from_json(const Json& j);

Json to_json(const Decomposition& dec);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json to_json(const GraphAction& act);
GraphAction action_from_json(const Json& j);

Json to_json(const PeriodicGraph& pg);
PeriodicGraph periodic_from_json(const Json& j);

/// Accepts an array in stored-edge order, an object keyed by edge id, or
/// either of those wrapped as {"w": ...}.
Cochain1 cochain1_from_json(const Json& j, const Graph& g);
/// Object keyed by edge id.
Json to_json(const Cochain1& w, const Graph& g);
Json to_json(const Cochain0& f);

/// {"a", "f", "certificate": {"closed", "lattices"}}; lattices are the
/// per-component HNF bases flattened row-major.
Json to_json(const PeriodicDecomposition& dec, const std::vector<PeriodLattice>& lattices, bool closed);

Json to_json(const IntMatrix& m);

} // namespace eqcoh::io
