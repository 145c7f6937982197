#include "kneserlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kneserlab {

json hypergraph_to_json(const Hypergraph& h) {
    json edges = json::array();
    for (VertexSet e : h.edges()) edges.push_back(set_elements(e));
    return json{{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph JSON requires fields n and edges");
    int n = j.at("n").get<int>();
    std::vector<VertexSet> edges;
    for (const auto& edge : j.at("edges")) {
        VertexSet mask = 0;
        for (const auto& v : edge) {
            int vi = v.get<int>();
            if (vi < 1 || vi > n) throw std::invalid_argument("vertex outside [n]");
            mask |= vbit(vi);
        }
        edges.push_back(mask);
    }
    return Hypergraph(n, std::move(edges));  // rejects duplicates and empty edges
}

json power_to_json(const PowerHypergraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(e);
    return json{{"n", g.num_vertices}, {"edges", std::move(edges)}};
}

PowerHypergraph power_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph JSON requires fields n and edges");
    PowerHypergraph g;
    g.num_vertices = j.at("n").get<int>();
    for (const auto& edge : j.at("edges")) {
        std::vector<int> e;
        for (const auto& v : edge) {
            int vi = v.get<int>();
            if (vi < 1 || vi > g.num_vertices) throw std::invalid_argument("vertex outside [n]");
            e.push_back(vi);
        }
        if (e.empty()) throw std::invalid_argument("empty edge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("repeated vertex in edge");
        g.edges.push_back(std::move(e));
    }
    return g;
}

json kneser_sidecar_json(const KneserPower& k) {
    json vertices = json::array();
    for (VertexSet e : k.base.edges()) vertices.push_back(set_elements(e));
    return json{{"r", k.r},
                {"base", hypergraph_to_json(k.base)},
                {"vertices", std::move(vertices)}};
}

json bound_report_to_json(const BoundReport& rep) {
    json j{{"name", rep.name},
           {"value", rep.value},
           {"raw", rep.raw},
           {"exact", rep.exact},
           {"mode", rep.exact ? "exact" : "heuristic"}};
    if (!rep.sigma.perm.empty()) j["sigma"] = rep.sigma.perm;
    for (const auto& [key, val] : rep.params) j["params"][key] = val;
    return j;
}

json chi_result_to_json(const ChiResult& chi) {
    json j{{"lo", chi.lo}, {"hi", chi.hi}, {"exact", chi.exact}, {"infeasible", chi.infeasible}};
    if (chi.exact && !chi.infeasible) j["value"] = chi.lo;
    return j;
}

json coloring_to_json(const Coloring& c) {
    return json{{"colors", c.num_colors}, {"values", c.values}};
}

Coloring coloring_from_json(const json& j) {
    Coloring c;
    c.num_colors = j.at("colors").get<int>();
    c.values = j.at("values").get<std::vector<int>>();
    if (!c.is_valid()) throw std::invalid_argument("coloring values outside [colors]");
    return c;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

}  // namespace kneserlab
