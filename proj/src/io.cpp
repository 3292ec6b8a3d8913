#include "valmat/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "valmat/caps.hpp"
#include "valmat/errors.hpp"

namespace valmat {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

long long require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw parse_error(where + ": expected an integer");
  return j.get<long long>();
}

std::vector<std::string> require_string_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw parse_error(where + ": expected strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rat parse_rat(const std::string& text, const std::string& where) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw parse_error(where + ": zero denominator");
    return Rat(num, den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error(where + ": bad rational \"" + text + "\"");
  }
}

std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw parse_error("point entry \"" + item + "\" is missing '='");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

}  // namespace

Valuation parse_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw parse_error("instance document must be an object");
  if (!doc.contains("format") || doc["format"] != kInstanceFormat)
    throw parse_error(std::string("instance format must be \"") + kInstanceFormat + "\"");
  if (!doc.contains("elements") || !doc.contains("rank") || !doc.contains("bases"))
    throw parse_error("instance needs elements, rank, and bases");

  GroundSet ground = [&] {
    try {
      return GroundSet(require_string_array(doc["elements"], "elements"));
    } catch (const domain_error& e) {
      throw parse_error(std::string("elements: ") + e.what());
    }
  }();
  long long rank = require_int(doc["rank"], "rank");
  if (rank < 0 || rank > ground.size()) throw parse_error("rank out of range");

  if (!doc["bases"].is_array() || doc["bases"].empty())
    throw parse_error("bases must be a nonempty array");
  std::vector<std::pair<Subset, long long>> entries;
  int pos = 0;
  for (const auto& item : doc["bases"]) {
    std::string where = "bases[" + std::to_string(pos) + "]";
    if (!item.is_object() || !item.contains("elements") || !item.contains("value"))
      throw parse_error(where + ": expected {elements, value}");
    Subset b = kEmptySubset;
    for (const std::string& label : require_string_array(item["elements"], where)) {
      int i;
      try {
        i = ground.index(label);
      } catch (const parse_error&) {
        throw parse_error(where + ": unknown element label \"" + label + "\"");
      }
      if (has(b, i)) throw parse_error(where + ": repeated element \"" + label + "\"");
      b |= bit(i);
    }
    if (subset_size(b) != rank)
      throw parse_error(where + ": base has size " + std::to_string(subset_size(b)) +
                        ", rank is " + std::to_string(rank));
    entries.emplace_back(b, require_int(item["value"], where + ".value"));
    ++pos;
  }
  try {
    return make_valuation(std::move(ground), static_cast<int>(rank), std::move(entries));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

std::string emit_instance(const Valuation& v,
                          const std::optional<std::string>& provenance_json) {
  ordered_json doc;
  doc["format"] = kInstanceFormat;
  doc["elements"] = v.ground().labels();
  doc["rank"] = v.rank();
  doc["bases"] = ordered_json::array();
  for (std::size_t i = 0; i < v.family().bases().size(); ++i) {
    ordered_json entry;
    entry["elements"] = v.ground().subset_labels(v.family().bases()[i]);
    entry["value"] = v.value_at(static_cast<int>(i));
    doc["bases"].push_back(std::move(entry));
  }
  if (provenance_json) doc["provenance"] = parse_json(*provenance_json);
  return doc.dump(2) + "\n";
}

Point parse_point(const GroundSet& g, const std::string& text) {
  Point out = zero_point(g);
  std::vector<bool> set(g.size(), false);
  for (const auto& [label, value] : split_pairs(text)) {
    int i = g.index(label);
    if (set[i]) throw parse_error("repeated label \"" + label + "\" in point");
    set[i] = true;
    try {
      out[i] = std::stoll(value);
    } catch (const std::exception&) {
      throw parse_error("bad integer \"" + value + "\" for \"" + label + "\"");
    }
  }
  return out;
}

RationalPoint parse_rational_point(const GroundSet& g, const std::string& text) {
  RationalPoint out(g.size(), Rat(0));
  std::vector<bool> set(g.size(), false);
  for (const auto& [label, value] : split_pairs(text)) {
    int i = g.index(label);
    if (set[i]) throw parse_error("repeated label \"" + label + "\" in point");
    set[i] = true;
    out[i] = parse_rat(value, "point entry \"" + label + "\"");
  }
  return out;
}

Subset parse_subset(const GroundSet& g, const std::string& text) {
  Subset out = kEmptySubset;
  std::stringstream ss(text);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (label.empty()) continue;
    int i = g.index(label);
    if (has(out, i)) throw parse_error("repeated label \"" + label + "\" in subset");
    out |= bit(i);
  }
  return out;
}

TreeInstance parse_tree(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc.contains("leaves") || !doc.contains("root"))
    throw parse_error("tree document needs vertices, edges, leaves, root");
  TreeInstance t;
  t.vertices = require_string_array(doc["vertices"], "vertices");
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i) {
    if (!index.emplace(t.vertices[i], i).second)
      throw parse_error("duplicate vertex \"" + t.vertices[i] + "\"");
  }
  auto vertex = [&](const json& j, const std::string& where) {
    if (!j.is_string()) throw parse_error(where + ": expected a vertex name");
    auto it = index.find(j.get<std::string>());
    if (it == index.end())
      throw parse_error(where + ": unknown vertex \"" + j.get<std::string>() + "\"");
    return it->second;
  };
  if (!doc["edges"].is_array()) throw parse_error("edges must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw parse_error("edges must be [a, b] pairs");
    t.edges.emplace_back(vertex(e[0], "edge"), vertex(e[1], "edge"));
  }
  for (const auto& leaf : doc["leaves"]) t.leaves.push_back(vertex(leaf, "leaves"));
  t.root = vertex(doc["root"], "root");
  return t;
}

PolyMatrix parse_poly_matrix(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("columns"))
    throw parse_error("matrix document needs rows and columns");
  PolyMatrix m;
  m.rows = static_cast<int>(require_int(doc["rows"], "rows"));
  if (!doc["columns"].is_array()) throw parse_error("columns must be an array");
  for (const auto& col : doc["columns"]) {
    if (!col.is_object() || !col.contains("label") || !col.contains("entries"))
      throw parse_error("each column needs label and entries");
    if (!col["label"].is_string()) throw parse_error("column label must be a string");
    m.labels.push_back(col["label"].get<std::string>());
    std::vector<IntPoly> entries;
    if (!col["entries"].is_array()) throw parse_error("entries must be an array");
    for (const auto& poly : col["entries"]) {
      if (!poly.is_array()) throw parse_error("each entry is a coefficient array");
      std::vector<long long> coeffs;
      for (const auto& c : poly) coeffs.push_back(require_int(c, "coefficient"));
      entries.emplace_back(std::move(coeffs));
    }
    m.columns.push_back(std::move(entries));
  }
  return m;
}

std::string export_dot(const Valuation& v, const LatticePoint& x,
                       const LatticePoint& y) {
  auto points = interval(v, x, y);
  if (points.size() > caps().dot_points)
    throw domain_error("interval too large for DOT export (cap " +
                       std::to_string(caps().dot_points) + ")");
  Point all_one_top = x.point;
  for (auto& c : all_one_top) ++c;
  bool label_flats = (y.point == all_one_top);

  auto coord_label = [&](const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(p[i]);
    }
    return out + ")";
  };
  auto node_id = [&](const Point& p) {
    std::string out = "n";
    for (long long c : p) out += "_" + std::to_string(c);
    std::replace(out.begin(), out.end(), '-', 'm');
    return out;
  };

  std::ostringstream dot;
  dot << "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& p : points) {
    dot << "  " << node_id(p.point) << " [label=\"" << coord_label(p.point);
    if (label_flats) {
      Subset flat = kEmptySubset;
      for (std::size_t i = 0; i < p.point.size(); ++i)
        if (p.point[i] > x.point[i]) flat |= bit(static_cast<int>(i));
      dot << "\\n{";
      bool first = true;
      for (const auto& l : v.ground().subset_labels(flat)) {
        if (!first) dot << ",";
        dot << l;
        first = false;
      }
      dot << "}";
    }
    dot << "\"];\n";
  }
  std::set<std::vector<long long>> in_interval;
  for (const auto& p : points) in_interval.insert(p.point);
  for (const auto& p : points) {
    for (const auto& c : covers(v, p)) {
      if (in_interval.count(c.point))
        dot << "  " << node_id(p.point) << " -> " << node_id(c.point) << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace valmat
