#pragma once

#include <string>

#include <json.hpp>

#include "commbench/cover.h"
#include "commbench/direct_sum.h"
#include "commbench/fooling.h"
#include "commbench/fortify.h"
#include "commbench/measure.h"
#include "commbench/problem.h"
#include "commbench/protocol.h"
#include "commbench/rect_enum.h"

namespace commbench::json_io {

using nlohmann::json;

// Problems: {"name", "rows", "cols", "colors", "kind": "function", "table"}
// or {"kind": "relation", "accept": [[x, y, z], ...]}.
json problem_to_json(const Problem& p);
Problem problem_from_json(const json& j);

// {"cells": [[x, y], ...]} in ascending cell order.
json cells_to_json(const Problem& p, const CellSet& cells);
CellSet cells_from_json(const Problem& p, const json& j);

// {"rows": [...], "cols": [...]}
json rect_to_json(const Rect& r);
Rect rect_from_json(const Problem& p, const json& j);

json colored_rect_to_json(const ColoredRect& r);
json index_to_json(const MonoRectIndex& index);
json cover_to_json(const CoverResult& r);
ColoredCover cover_from_json(const Problem& p, const json& j);

// Leaf {"color", "rows", "cols"}; internal {"owner": "A"|"B", "rows",
// "cols", "children": [node, node]}.
json tree_to_json(const ProtocolTree& t);
ProtocolTree tree_from_json(const Problem& p, const json& j);

// {"variables": n, "probabilities": [...]}
json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const json& j);

json rational_to_json(const Rational& q);
json certificate_to_json(const Problem& p, const FoolingCertificate& c);
json fortification_to_json(const FortificationResult& r);
json bound_to_json(const Bound& b);
json report_to_json(const DirectSumReport& r);

// Reads a file; throws Error(kParse) with the path on failure.
json read_file(const std::string& path);

}  // namespace commbench::json_io
