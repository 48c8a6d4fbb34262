#include "commbench/json_io.h"

#include <fstream>

namespace commbench::json_io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

json index_list(Mask m) { return mask_indices(m); }

Mask mask_from_list(const json& j, int limit, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  Mask m = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_error(std::string(what) + " entries must be integers");
    const int i = v.get<int>();
    if (i < 0 || i >= limit) parse_error(std::string(what) + " index " + std::to_string(i) + " out of range");
    m |= bit(i);
  }
  return m;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    parse_error(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

json problem_to_json(const Problem& p) {
  json j;
  j["name"] = p.name();
  j["rows"] = p.rows();
  j["cols"] = p.cols();
  j["colors"] = p.colors();
  if (p.is_function()) {
    j["kind"] = "function";
    json table = json::array();
    for (int x = 0; x < p.rows(); ++x) {
      json row = json::array();
      for (int y = 0; y < p.cols(); ++y) row.push_back(p.function_value(x, y));
      table.push_back(row);
    }
    j["table"] = table;
  } else {
    j["kind"] = "relation";
    json accept = json::array();
    for (const auto& [x, y, z] : p.accept_list()) accept.push_back({x, y, z});
    j["accept"] = accept;
  }
  return j;
}

Problem problem_from_json(const json& j) {
  if (!j.is_object()) parse_error("problem must be a JSON object");
  const std::string name = j.value("name", std::string("problem"));
  const int colors = get_int(j, "colors");
  const std::string kind = j.value("kind", std::string());
  if (kind == "function") {
    if (!j.contains("table") || !j.at("table").is_array()) parse_error("function needs \"table\"");
    std::vector<std::vector<int>> grid;
    for (const auto& row : j.at("table")) {
      if (!row.is_array()) parse_error("table rows must be arrays");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) parse_error("table entries must be integers");
        r.push_back(v.get<int>());
      }
      grid.push_back(std::move(r));
    }
    Problem p = make_function_problem(grid, colors, name);
    if (j.contains("rows") && get_int(j, "rows") != p.rows()) parse_error("\"rows\" disagrees with table");
    if (j.contains("cols") && get_int(j, "cols") != p.cols()) parse_error("\"cols\" disagrees with table");
    return p;
  }
  if (kind == "relation") {
    const int rows = get_int(j, "rows");
    const int cols = get_int(j, "cols");
    if (!j.contains("accept") || !j.at("accept").is_array()) parse_error("relation needs \"accept\"");
    std::vector<AcceptTriple> accept;
    for (const auto& t : j.at("accept")) {
      if (!t.is_array() || t.size() != 3) parse_error("accept entries must be [x, y, z]");
      accept.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return make_relation_problem(rows, cols, colors, accept, name);
  }
  parse_error("\"kind\" must be \"function\" or \"relation\"");
}

json cells_to_json(const Problem& p, const CellSet& cells) {
  json list = json::array();
  cells.for_each([&](int c) {
    const auto [x, y] = p.cell_coords(c);
    list.push_back({x, y});
  });
  return json{{"cells", list}};
}

CellSet cells_from_json(const Problem& p, const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
    parse_error("cell set needs \"cells\"");
  CellSet out;
  for (const auto& c : j.at("cells")) {
    if (!c.is_array() || c.size() != 2) parse_error("cells must be [x, y] pairs");
    const int x = c[0].get<int>();
    const int y = c[1].get<int>();
    if (x < 0 || x >= p.rows() || y < 0 || y >= p.cols())
      parse_error("cell (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    out.insert(p.cell(x, y));
  }
  return out;
}

json rect_to_json(const Rect& r) { return json{{"rows", index_list(r.rows)}, {"cols", index_list(r.cols)}}; }

Rect rect_from_json(const Problem& p, const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
    parse_error("rectangle needs \"rows\" and \"cols\"");
  return {mask_from_list(j.at("rows"), p.rows(), "rows"),
          mask_from_list(j.at("cols"), p.cols(), "cols")};
}

json colored_rect_to_json(const ColoredRect& r) {
  return json{{"color", r.color}, {"rows", index_list(r.rect.rows)}, {"cols", index_list(r.rect.cols)}};
}

json index_to_json(const MonoRectIndex& index) {
  json out = json::array();
  for (const auto& r : index.all()) out.push_back(colored_rect_to_json(r));
  return out;
}

json cover_to_json(const CoverResult& r) {
  json witness = json::array();
  for (const auto& e : r.witness) witness.push_back(colored_rect_to_json(e));
  return json{{"value", r.value}, {"witness", witness}};
}

ColoredCover cover_from_json(const Problem& p, const json& j) {
  const json& list = j.is_object() && j.contains("witness") ? j.at("witness") : j;
  if (!list.is_array()) parse_error("cover must be an array of colored rectangles");
  ColoredCover out;
  for (const auto& e : list) out.push_back({rect_from_json(p, e), get_int(e, "color")});
  return out;
}

namespace {

json node_to_json(const ProtocolTree& t, int i) {
  const auto& n = t.node(i);
  json j;
  if (n.leaf) {
    j["color"] = n.color;
    j["rows"] = index_list(n.rect.rows);
    j["cols"] = index_list(n.rect.cols);
  } else {
    j["owner"] = n.owner == Owner::kAlice ? "A" : "B";
    j["rows"] = index_list(n.rect.rows);
    j["cols"] = index_list(n.rect.cols);
    j["children"] = json::array({node_to_json(t, n.child[0]), node_to_json(t, n.child[1])});
  }
  return j;
}

int node_from_json(const Problem& p, const json& j, ProtocolTree& t, int depth) {
  if (depth > 256) parse_error("protocol tree too deep");
  if (!j.is_object()) parse_error("protocol nodes must be objects");
  const Rect r = rect_from_json(p, j);
  if (j.contains("children")) {
    const json& kids = j.at("children");
    if (!kids.is_array() || kids.size() != 2) parse_error("internal nodes need two children");
    const std::string owner = j.value("owner", std::string());
    if (owner != "A" && owner != "B") parse_error("\"owner\" must be \"A\" or \"B\"");
    const int c0 = node_from_json(p, kids[0], t, depth + 1);
    const int c1 = node_from_json(p, kids[1], t, depth + 1);
    return t.add_internal(owner == "A" ? Owner::kAlice : Owner::kBob, r, c0, c1);
  }
  return t.add_leaf(r, get_int(j, "color"));
}

}  // namespace

json tree_to_json(const ProtocolTree& t) { return t.empty() ? json() : node_to_json(t, t.root()); }

ProtocolTree tree_from_json(const Problem& p, const json& j) {
  ProtocolTree t;
  t.set_root(node_from_json(p, j, t, 0));
  return t;
}

json distribution_to_json(const Distribution& d) {
  return json{{"variables", d.variables}, {"probabilities", d.probabilities}};
}

Distribution distribution_from_json(const json& j) {
  if (!j.is_object()) parse_error("distribution must be an object");
  Distribution d;
  d.variables = get_int(j, "variables");
  if (!j.contains("probabilities") || !j.at("probabilities").is_array())
    parse_error("distribution needs \"probabilities\"");
  for (const auto& v : j.at("probabilities")) {
    if (!v.is_number()) parse_error("probabilities must be numbers");
    d.probabilities.push_back(v.get<double>());
  }
  return d;
}

json rational_to_json(const Rational& q) { return json{{"num", q.num()}, {"den", q.den()}}; }

json certificate_to_json(const Problem& p, const FoolingCertificate& c) {
  return json{{"lambda", cells_to_json(p, c.lambda).at("cells")},
              {"delta", rational_to_json(c.delta)},
              {"witness", rect_to_json(c.witness.rect)},
              {"witness_color", c.witness.color},
              {"cov_lb", c.cov_lb}};
}

json fortification_to_json(const FortificationResult& r) {
  return json{{"sigma", index_list(r.sigma)},
              {"lambda0", index_list(r.lambda0)},
              {"lambda", index_list(r.lambda)},
              {"c", r.c},
              {"weak_rho", r.weak_rho},
              {"rho", r.rho},
              {"mu_sigma", r.mu_sigma},
              {"mu_lambda0", r.mu_lambda0},
              {"mu_lambda", r.mu_lambda},
              {"inverse_trace_length", r.inverse_trace.size()},
              {"weak_trace_length", r.weak_trace.size()},
              {"certified", r.certified}};
}

namespace {

json value_to_json(const BoundValue& v, bool rational_form) {
  if (v.exact) {
    if (rational_form) return rational_to_json(*v.exact);
    if (v.exact->is_integer()) return v.exact->num();
    return v.approx;
  }
  return v.approx;
}

}  // namespace

json bound_to_json(const Bound& b) {
  json j{{"bound", b.name},
         {"lhs", value_to_json(b.lhs, false)},
         {"rhs", value_to_json(b.rhs, true)},
         {"holds", b.holds},
         {"vacuous", b.vacuous}};
  if (b.relation == Relation::kEq) j["relation"] = "==";
  return j;
}

json report_to_json(const DirectSumReport& r) {
  json out = json::array();
  for (const auto& b : r.bounds) out.push_back(bound_to_json(b));
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

}  // namespace commbench::json_io
