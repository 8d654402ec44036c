#include "gridposet/json_io.hpp"

#include <algorithm>

namespace gridposet {

using nlohmann::json;

json toJson(const GridFamily& family) {
    json points = json::array();
    for (const GridPoint& p : family.points()) points.push_back(p.coords);
    return json{{"dims", family.shape().dims}, {"points", points}};
}

GridFamily familyFromJson(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("points"))
        throw InputError("family JSON must have 'dims' and 'points'");
    GridShape shape(j.at("dims").get<std::vector<int>>());
    GridFamily f(shape);
    for (const auto& arr : j.at("points")) {
        GridPoint p{arr.get<std::vector<int>>()};
        if (!shape.valid(p)) throw InputError("family JSON point outside the grid");
        f.insert(p);
    }
    return f;
}

json witnessToJson(const Witness& w, const Poset& pattern, const GridShape& shape) {
    GridFamily image(shape);
    for (long long idx : w.image) image.insertIndex(idx);
    json out = toJson(image);
    json map = json::object();
    for (int e = 0; e < pattern.size(); ++e)
        map[pattern.label(e)] = shape.pointAt(w.image[e]).coords;
    out["map"] = map;
    return out;
}

json toJson(const BinaryMatrix& m) {
    json rows = json::array();
    std::string text = m.toText();
    size_t start = 0;
    for (int r = 0; r < m.rows(); ++r) {
        rows.push_back(text.substr(start, m.cols()));
        start += m.cols() + 1;
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"text", rows}};
}

BinaryMatrix matrixFromJson(const json& j) {
    std::string text;
    for (const auto& line : j.at("text")) text += line.get<std::string>() + "\n";
    BinaryMatrix m = BinaryMatrix::fromText(text);
    if (m.rows() != j.at("rows").get<int>() || m.cols() != j.at("cols").get<int>())
        throw InputError("matrix JSON dimensions disagree with text");
    return m;
}

json toJson(const SearchResult& r, bool canonical) {
    return json{{"value", r.value},
                {"witness", toJson(r.witness)},
                {"nodes_explored", r.stats.nodes},
                {"wall_ms", canonical ? 0.0 : r.stats.wallMs}};
}

json toJson(const MatrixSearchResult& r, bool canonical) {
    return json{{"value", r.value},
                {"witness", toJson(r.witness)},
                {"nodes_explored", r.stats.nodes},
                {"wall_ms", canonical ? 0.0 : r.stats.wallMs}};
}

}  // namespace gridposet
