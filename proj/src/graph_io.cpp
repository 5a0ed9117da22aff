// SPDX-License-Identifier: MIT
#include "hypcone/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypcone {

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error("graph JSON needs \"vertices\" and \"edges\"");

    std::vector<std::pair<int, std::string>> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id"))
            throw Error("vertex entries need an \"id\"");
        vs.emplace_back(v["id"].get<int>(),
                        v.contains("label") ? v["label"].get<std::string>() : std::string());
    }
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw Error("edge entries must be [u,v] pairs");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(vs, es);
}

Graph read_graph_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph_json(in);
}

void write_graph_json(const Graph& g, std::ostream& out) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int i = 0; i < g.num_vertices(); ++i) {
        int id = g.of_index(i);
        nlohmann::ordered_json v;
        v["id"] = id;
        const std::string& label = g.label(id);
        if (!label.empty()) v["label"] = label;
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    out << j.dump(2) << "\n";
}

void write_graph_json_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF on every platform
    if (!out) throw Error("cannot open " + path + " for writing");
    write_graph_json(g, out);
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> es;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw Error("bad edge list line: \"" + line + "\"");
        es.emplace_back(u, v);
    }
    return build_graph(es);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return read_graph_json_file(path);
    return read_edge_list_file(path);
}

} // namespace hypcone
