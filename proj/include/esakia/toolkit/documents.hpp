#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esakia/constructions/staged.hpp"
#include "esakia/lattice.hpp"
#include "esakia/poset.hpp"
#include "esakia/topology.hpp"
#include "json.hpp"

namespace esakia {

using Json = nlohmann::ordered_json;

/// Optional structural hint carried by a poset document.
enum class PosetKind { Tree, Forest, RootSystem };

std::string to_string(PosetKind kind);
/// Throws ParseError on an unknown name.
PosetKind parse_kind(const std::string& name);

struct PosetDocument {
  FinitePoset poset;
  std::optional<PosetKind> kind;
};

/// {"elements":[labels],"covers":[[lower,upper],...],"kind":"tree"}, kind
/// optional. Element i is the i-th listed label. Throws ParseError for
/// malformed JSON, duplicate or unknown labels, and whatever the poset builder
/// raises (CycleError, NonHasseEdge, SizeCap).
PosetDocument parse_poset_document(const std::string& text);
FinitePoset parse_poset(const std::string& text);
PosetDocument poset_document_from_json(const Json& doc);

/// Single-line document with covers in index order. Throws InvalidElement if
/// two elements share a label.
Json poset_to_json(const FinitePoset& p, std::optional<PosetKind> kind = std::nullopt);
std::string emit_poset(const FinitePoset& p, std::optional<PosetKind> kind = std::nullopt);

/// Either {"elements":[labels],"meet":[[i,...]],"join":[[i,...]]} with
/// entries indexing `elements`, or {"join_irreducibles": <poset document>}
/// standing for the lattice of downsets of that poset. The tables are
/// validated as a bounded distributive lattice.
FiniteLattice parse_lattice(const std::string& text);
Json lattice_to_json(const FiniteLattice& l);

/// {"cover":[[labels],...]}: each entry is a set of element labels.
std::vector<PointSet> parse_cover(const std::string& text, const FinitePoset& p);

/// Sets as label arrays in ascending index order.
Json set_to_json(const FinitePoset& p, const PointSet& s);
/// {"carrier_size":n,"subbase":[[labels],...]}
Json topology_to_json(const FinitePoset& p, const FiniteTopology& t);
/// Per level: alpha, P_α, S_α and the subbase as sorted index arrays.
Json staged_to_json(const StagedTopology& st);

/// DOT digraph with nodes sorted by label and cover edges pointing upward,
/// sorted by (lower label, upper label). With a topology, the subbase sets
/// are listed in the graph label.
std::string export_dot(const FinitePoset& p, const FiniteTopology* t = nullptr);

std::string read_file(const std::string& path);

}  // namespace esakia
