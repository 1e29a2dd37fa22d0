#pragma once

// JSON serialization for graphs and diagrams.
//
// Graph files:   {"dimension": d, "vertices": [[x1,...,xd], ...], "edges": [[i,j], ...]}
// Diagram files: {"direction": [...], "dim0": [[b, d-or-null], ...], "dim1": [[b, null], ...]}

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "apdrec/graph.hpp"
#include "apdrec/persistence.hpp"

namespace apdrec {

inline nlohmann::json graph_to_json(const ImmersedGraph& g) {
    nlohmann::json j;
    j["dimension"] = g.dimension;
    auto& verts = j["vertices"] = nlohmann::json::array();
    for (const Point& p : g.vertices) verts.push_back(p.coords);
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return j;
}

inline void write_graph(const ImmersedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << graph_to_json(g).dump(2) << '\n';
    if (!out) throw ParseError("write failed: " + path);
}

// Parses, validates structural invariants, then the general-position check.
inline ImmersedGraph read_graph(const std::string& path, double gp_eps = kDefaultEps) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }

    ImmersedGraph g;
    try {
        g.dimension = j.at("dimension").get<int>();
        for (const auto& v : j.at("vertices"))
            g.vertices.push_back(Point(v.get<std::vector<double>>()));
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be an index pair");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed graph in " + path + ": " + e.what());
    } catch (const DegenerateInputError& e) {
        throw ParseError("malformed vertex in " + path + ": " + e.what());
    }
    g.validate_structure();

    const GpReport report = check_general_position(g.vertices, gp_eps);
    if (!report.all_ok())
        throw GpViolationError("vertex set of " + path + " is not in general position", report);
    return g;
}

inline nlohmann::json diagram_to_json(const AugmentedDiagram& d) {
    nlohmann::json j;
    j["direction"] = d.direction.coords;
    auto dump_points = [](const std::vector<DiagramPoint>& pts) {
        nlohmann::json arr = nlohmann::json::array();
        for (const DiagramPoint& p : pts) {
            nlohmann::json pair = nlohmann::json::array();
            pair.push_back(p.birth);
            if (p.death)
                pair.push_back(*p.death);
            else
                pair.push_back(nullptr);
            arr.push_back(std::move(pair));
        }
        return arr;
    };
    j["dim0"] = dump_points(d.dim0);
    j["dim1"] = dump_points(d.dim1);
    return j;
}

inline void write_diagram(const AugmentedDiagram& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << diagram_to_json(d).dump(2) << '\n';
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace apdrec
