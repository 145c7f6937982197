#pragma once

#include <string>

#include "json.hpp"
#include "kneserlab/chromatic.hpp"
#include "kneserlab/hypergraph.hpp"
#include "kneserlab/kneser.hpp"

namespace kneserlab {

using json = nlohmann::json;

/// {"n": int, "edges": [[int,...],...]} with 1-based vertices.  The reader
/// rejects duplicate edges, empty edges and out-of-range vertices.
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json power_to_json(const PowerHypergraph& g);
PowerHypergraph power_from_json(const json& j);

/// Sidecar mapping power-vertex index -> base edge.
json kneser_sidecar_json(const KneserPower& k);

json bound_report_to_json(const BoundReport& rep);
json chi_result_to_json(const ChiResult& chi);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kneserlab
