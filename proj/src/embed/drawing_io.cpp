#include "rydmis/grid_drawing.hpp"

#include "json.hpp"

namespace rydmis {

std::string drawing_to_json(const GridDrawing& d) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::object();
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        j["vertices"][std::to_string(v)] = {d.vertices[v].x, d.vertices[v].y};
    j["edges"] = nlohmann::json::array();
    for (const auto& e : d.edges) {
        nlohmann::json path = nlohmann::json::array();
        for (const auto& p : e.path) path.push_back({p.x, p.y});
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"path", path}});
    }
    return j.dump();
}

GridDrawing parse_drawing_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_column(text, e.byte);
        throw StageError("parse", "drawing JSON error at line " + std::to_string(l) + ", column " +
                                      std::to_string(c));
    }
    try {
        GridDrawing d;
        const auto& vs = j.at("vertices");
        d.vertices.resize(vs.size());
        std::vector<char> seen(vs.size(), 0);
        for (auto it = vs.begin(); it != vs.end(); ++it) {
            std::size_t pos = 0;
            long v = std::stol(it.key(), &pos);
            if (pos != it.key().size() || v < 0 || v >= static_cast<long>(vs.size()) ||
                seen[static_cast<std::size_t>(v)])
                throw StageError("parse", "drawing JSON: bad vertex key \"" + it.key() + "\"");
            seen[static_cast<std::size_t>(v)] = 1;
            d.vertices[static_cast<std::size_t>(v)] = {it.value().at(0).get<long>(), it.value().at(1).get<long>()};
        }
        for (const auto& e : j.at("edges")) {
            DrawnEdge de;
            de.u = e.at("u").get<int>();
            de.v = e.at("v").get<int>();
            for (const auto& p : e.at("path")) de.path.push_back({p.at(0).get<long>(), p.at(1).get<long>()});
            d.edges.push_back(std::move(de));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw StageError("parse", std::string("drawing JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw StageError("parse", "drawing JSON: non-numeric vertex key");
    }
}

IngestedDrawing ingest_drawing(const std::string& text) {
    IngestedDrawing out;
    out.drawing = parse_drawing_json(text);
    out.report = validate_drawing(out.drawing, drawing_graph(out.drawing));
    return out;
}

GridDrawing ingest_drawing_checked(const std::string& text) {
    auto in = ingest_drawing(text);
    if (!in.report.ok()) throw StageError("embed", "invalid drawing: " + in.report.violations.front());
    return in.drawing;
}

}  // namespace rydmis
