#include "esakia/toolkit/documents.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "esakia/error.hpp"

namespace esakia {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

std::vector<std::string> string_list(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, Element> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw Error(ErrorCode::ParseError, "empty label");
    if (!index.emplace(labels[i], static_cast<Element>(i)).second) {
      throw Error(ErrorCode::ParseError, "duplicate label \"" + labels[i] + "\"");
    }
  }
  return index;
}

Element lookup(const std::map<std::string, Element>& index, const std::string& label) {
  auto it = index.find(label);
  if (it == index.end()) throw Error(ErrorCode::ParseError, "unknown label \"" + label + "\"");
  return it->second;
}

Table parse_table(const Json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an n x n array");
  }
  Table t;
  for (const Json& row : v) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, std::string(what) + " must be an n x n array");
    }
    std::vector<int> r;
    for (const Json& e : row) {
      if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " entries must be integers");
      r.push_back(e.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::Tree: return "tree";
    case PosetKind::Forest: return "forest";
    case PosetKind::RootSystem: return "root_system";
  }
  return "tree";
}

PosetKind parse_kind(const std::string& name) {
  if (name == "tree") return PosetKind::Tree;
  if (name == "forest") return PosetKind::Forest;
  if (name == "root_system") return PosetKind::RootSystem;
  throw Error(ErrorCode::ParseError, "unknown kind \"" + name + "\"");
}

PosetDocument poset_document_from_json(const Json& doc) {
  const std::vector<std::string> labels = string_list(field(doc, "elements"), "elements");
  const auto index = label_index(labels);
  const Json& covers = field(doc, "covers");
  if (!covers.is_array()) throw Error(ErrorCode::ParseError, "covers must be an array");
  std::vector<Cover> edges;
  for (const Json& c : covers) {
    const auto pair = string_list(c, "cover");
    if (pair.size() != 2) throw Error(ErrorCode::ParseError, "a cover is a [lower, upper] pair");
    edges.push_back({lookup(index, pair[0]), lookup(index, pair[1])});
  }
  PosetDocument out;
  if (doc.contains("kind")) {
    if (!doc.at("kind").is_string()) throw Error(ErrorCode::ParseError, "kind must be a string");
    out.kind = parse_kind(doc.at("kind").get<std::string>());
  }
  out.poset = FinitePoset::from_covers(static_cast<int>(labels.size()), std::move(edges), labels);
  return out;
}

PosetDocument parse_poset_document(const std::string& text) {
  return poset_document_from_json(parse_json(text));
}

FinitePoset parse_poset(const std::string& text) { return parse_poset_document(text).poset; }

Json poset_to_json(const FinitePoset& p, std::optional<PosetKind> kind) {
  try {
    label_index(p.labels());
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidElement, std::string("cannot emit: ") + e.what());
  }
  Json doc;
  doc["elements"] = p.labels();
  Json covers = Json::array();
  for (const Cover& c : p.covers()) covers.push_back({p.label(c.lower), p.label(c.upper)});
  doc["covers"] = std::move(covers);
  if (kind) doc["kind"] = to_string(*kind);
  return doc;
}

std::string emit_poset(const FinitePoset& p, std::optional<PosetKind> kind) {
  return poset_to_json(p, kind).dump();
}

FiniteLattice parse_lattice(const std::string& text) {
  const Json doc = parse_json(text);
  if (doc.is_object() && doc.contains("join_irreducibles")) {
    const FinitePoset j = poset_document_from_json(doc.at("join_irreducibles")).poset;
    // Downsets of J are the upsets of its dual.
    return upset_algebra(order_dual(j)).algebra.lattice();
  }
  const std::vector<std::string> labels = string_list(field(doc, "elements"), "elements");
  label_index(labels);
  const Table meet = parse_table(field(doc, "meet"), labels.size(), "meet");
  const Table join = parse_table(field(doc, "join"), labels.size(), "join");
  return validate_lattice(meet, join, labels);
}

Json lattice_to_json(const FiniteLattice& l) {
  Json doc;
  doc["elements"] = l.labels();
  doc["meet"] = l.meet_table();
  doc["join"] = l.join_table();
  return doc;
}

std::vector<PointSet> parse_cover(const std::string& text, const FinitePoset& p) {
  const Json doc = parse_json(text);
  const Json& cover = field(doc, "cover");
  if (!cover.is_array()) throw Error(ErrorCode::ParseError, "cover must be an array");
  const auto index = label_index(p.labels());
  std::vector<PointSet> out;
  for (const Json& entry : cover) {
    PointSet s;
    for (const std::string& label : string_list(entry, "cover entry")) s.insert(lookup(index, label));
    out.push_back(s);
  }
  return out;
}

Json set_to_json(const FinitePoset& p, const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](Element x) { out.push_back(p.label(x)); });
  return out;
}

Json topology_to_json(const FinitePoset& p, const FiniteTopology& t) {
  Json doc;
  doc["carrier_size"] = t.carrier_size();
  Json sub = Json::array();
  for (const PointSet& s : t.subbase()) sub.push_back(set_to_json(p, s));
  doc["subbase"] = std::move(sub);
  return doc;
}

Json staged_to_json(const StagedTopology& st) {
  Json levels = Json::array();
  for (const StagedLevel& level : st.levels()) {
    Json l;
    l["alpha"] = level.alpha;
    l["p"] = level.p_set.members();
    l["s"] = level.s_set.members();
    Json sub = Json::array();
    for (const SubbaseEntry& e : level.subbase) sub.push_back(e.set.members());
    l["subbase"] = std::move(sub);
    l["opens_complete"] = level.opens_complete;
    levels.push_back(std::move(l));
  }
  Json doc;
  doc["height"] = st.height();
  doc["plus"] = st.plus_map();
  doc["restricted"] = st.restricted();
  doc["levels"] = std::move(levels);
  return doc;
}

std::string export_dot(const FinitePoset& p, const FiniteTopology* t) {
  std::vector<Element> nodes(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) nodes[static_cast<std::size_t>(x)] = x;
  std::sort(nodes.begin(), nodes.end(), [&](Element a, Element b) {
    return p.label(a) != p.label(b) ? p.label(a) < p.label(b) : a < b;
  });
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Cover& c : p.covers()) edges.emplace_back(p.label(c.lower), p.label(c.upper));
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  if (t != nullptr) {
    std::vector<std::string> sets;
    for (const PointSet& s : t->subbase()) sets.push_back(format_set(p, s));
    std::string label = "subbase:";
    for (const std::string& s : sets) label += " " + s;
    out << "  label=" << dot_quote(label) << ";\n";
  }
  for (Element x : nodes) out << "  " << dot_quote(p.label(x)) << ";\n";
  for (const auto& [lo, up] : edges) out << "  " << dot_quote(lo) << " -> " << dot_quote(up) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace esakia
