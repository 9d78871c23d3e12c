#include "rydmis/graph.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>

namespace rydmis {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

PlanarGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_column(text, e.byte);
        throw StageError("parse", "graph JSON error at line " + std::to_string(l) + ", column " +
                                      std::to_string(c));
    }
    try {
        PlanarGraph g;
        g.n = j.at("n").get<int>();
        for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw StageError("parse", std::string("graph JSON: ") + e.what());
    }
}

PlanarGraph parse_edge_list(const std::string& text) {
    PlanarGraph g;
    int declared = -1, max_index = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos) continue;
        if (line[p] == '#') {
            // optional "# n=K" header fixes the vertex count (isolated vertices)
            std::size_t q = line.find("n=", p);
            if (q != std::string::npos) declared = std::stoi(line.substr(q + 2));
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw StageError("parse", "edge list: malformed line " + std::to_string(lineno) + ", column " +
                                          std::to_string(p + 1));
        g.edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    g.n = std::max(declared, max_index + 1);
    return g;
}

PlanarGraph parse_graph(const std::string& text) {
    std::size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
}

std::string graph_to_json(const PlanarGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

}  // namespace rydmis
