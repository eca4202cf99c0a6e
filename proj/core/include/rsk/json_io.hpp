#pragma once

#include <nlohmann/json.hpp>

#include "rsk/classical_rsk.hpp"
#include "rsk/octahedron.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

using json = nlohmann::json;

// Wire formats:
//   Partition      [3, 2, 1]
//   Box            [row, col]
//   NTableau       {"shape": [...], "rows": [[...], ...]}
//                  (a bare array of arrays is accepted on input)
//   GtPattern      [[...], ...], row i with n+1-i entries
//   PyramidArray   [{"i":, "j":, "k":, "v":}, ...] sorted by (k, i, j)
// Decoding throws ParseError on malformed structure; semantic constraint
// violations surface as the usual validation errors.

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(Box b);
Box box_from_json(const json& j);
std::vector<Box> boxes_from_json(const json& j);

json to_json(const NTableau& t);
NTableau tableau_from_json(const json& j);

json to_json(const GtPattern& g);

json to_json(const PyramidArray& a);

} // namespace rsk
