#pragma once

#include <json.hpp>

#include "gridposet/containment.hpp"
#include "gridposet/engine.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/matrix.hpp"

namespace gridposet {

/// {"dims":[k1,...,kd],"points":[[c1,...,cd],...]}, 1-based coordinates,
/// points sorted lexicographically.
nlohmann::json toJson(const GridFamily& family);
GridFamily familyFromJson(const nlohmann::json& j);

/// Family JSON of the witness's image plus a "map" object
/// pattern-label -> coordinates.
nlohmann::json witnessToJson(const Witness& w, const Poset& pattern, const GridShape& shape);

nlohmann::json toJson(const BinaryMatrix& m);
BinaryMatrix matrixFromJson(const nlohmann::json& j);

/// {value, witness, nodes_explored, wall_ms}; wall_ms zeroed when canonical.
nlohmann::json toJson(const SearchResult& r, bool canonical);
nlohmann::json toJson(const MatrixSearchResult& r, bool canonical);

}  // namespace gridposet
