#ifndef RAINBOW_IO_HPP
#define RAINBOW_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/core.hpp"

namespace rainbow {

using nlohmann::json;

// Text format: first line "n m" (vertex count, edge count), then m lines
// "u v c" with 0-based vertex ids and 0-based class id.  Classes are the
// preimages of c.
inline std::string to_text(const ColoredGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& c : g.classes())
        for (const Edge& e : c.edges) out << e.u << ' ' << e.v << ' ' << c.id << '\n';
    return out.str();
}

inline ColoredGraph graph_from_text(std::istream& in, const std::string& origin = "<stream>") {
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw io_error(origin + ": missing 'n m' header");
    if (n < 0 || m < 0) throw io_error(origin + ": negative counts in header");
    std::map<int, std::vector<Edge>> by_class;
    for (long long i = 0; i < m; ++i) {
        long long u, v, c;
        if (!(in >> u >> v >> c)) throw io_error(origin + ": expected " + std::to_string(m) + " edge lines");
        if (c < 0) throw io_error(origin + ": negative class id on edge line " + std::to_string(i + 1));
        by_class[static_cast<int>(c)].push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
    }
    std::vector<ColorClass> classes;
    classes.reserve(by_class.size());
    for (auto& [id, edges] : by_class) classes.push_back(ColorClass{id, std::move(edges)});
    try {
        return ColoredGraph::create(static_cast<int>(n), std::move(classes));
    } catch (const param_error& e) {
        throw io_error(origin + ": " + e.what());
    }
}

// JSON mirror of the same schema.
inline json to_json(const ColoredGraph& g) {
    json edges = json::array();
    for (const auto& c : g.classes())
        for (const Edge& e : c.edges) edges.push_back({e.u, e.v, c.id});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline ColoredGraph graph_from_json(const json& j, const std::string& origin = "<json>") {
    if (!j.contains("n") || !j.contains("edges")) throw io_error(origin + ": expected {n, edges}");
    std::map<int, std::vector<Edge>> by_class;
    for (const auto& row : j.at("edges")) {
        if (!row.is_array() || row.size() != 3) throw io_error(origin + ": edge rows are [u, v, c]");
        int c = row[2].get<int>();
        if (c < 0) throw io_error(origin + ": negative class id");
        by_class[c].push_back(Edge{row[0].get<int>(), row[1].get<int>()});
    }
    std::vector<ColorClass> classes;
    for (auto& [id, edges] : by_class) classes.push_back(ColorClass{id, std::move(edges)});
    try {
        return ColoredGraph::create(j.at("n").get<int>(), std::move(classes));
    } catch (const param_error& e) {
        throw io_error(origin + ": " + e.what());
    }
}

// Sniffs JSON by a leading '{'; anything else is treated as text format.
inline ColoredGraph load_colored_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{') {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw io_error(path + ": " + e.what());
        }
        return graph_from_json(j, path);
    }
    return graph_from_text(in, path);
}

inline void save_colored_graph(const ColoredGraph& g, const std::string& path, bool as_json) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    if (as_json) out << to_json(g).dump(2) << '\n';
    else out << to_text(g);
    if (!out) throw io_error("write failed: " + path);
}

inline json certificate_to_json(const RainbowCycleCertificate& cert) {
    json edges = json::array();
    for (const Edge& e : cert.edges) edges.push_back({e.u, e.v});
    return json{{"length", cert.vertices.size()},
                {"vertices", cert.vertices},
                {"edges", edges},
                {"colors", cert.colors}};
}

inline RainbowCycleCertificate certificate_from_json(const json& j) {
    RainbowCycleCertificate cert;
    cert.vertices = j.at("vertices").get<std::vector<int>>();
    for (const auto& row : j.at("edges")) cert.edges.push_back(Edge{row[0].get<int>(), row[1].get<int>()});
    cert.colors = j.at("colors").get<std::vector<int>>();
    return cert;
}

}  // namespace rainbow

#endif
