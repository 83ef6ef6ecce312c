#include "commands.hpp"

#include <optional>

#include "CLI11.hpp"
#include "esakia/constructions/compactness.hpp"
#include "esakia/constructions/gallery.hpp"
#include "esakia/constructions/root_subbase.hpp"
#include "esakia/duality.hpp"
#include "esakia/error.hpp"
#include "esakia/toolkit/fuzz.hpp"
#include "esakia/toolkit/verify.hpp"

namespace esakia::cli {

namespace {

/// Input or precondition problem; reported on stderr with exit code 2.
struct UsageError {
  std::string message;
};

PosetDocument load_poset(const std::string& path) {
  try {
    return parse_poset_document(read_file(path));
  } catch (const Error& e) {
    throw UsageError{path + ": " + e.what()};
  }
}

PosetKind resolve_kind(const PosetDocument& doc, const std::string& flag) {
  PosetKind kind;
  if (!flag.empty()) {
    kind = parse_kind(flag);
  } else if (doc.kind) {
    kind = *doc.kind;
  } else if (is_tree(doc.poset)) {
    kind = PosetKind::Tree;
  } else if (is_root_system(doc.poset)) {
    kind = PosetKind::RootSystem;
  } else {
    throw UsageError{"poset is neither a tree nor a root system"};
  }
  if (kind == PosetKind::Tree && !is_tree(doc.poset)) throw UsageError{"kind tree, but the poset is not a tree"};
  if (kind == PosetKind::RootSystem && !is_root_system(doc.poset)) {
    throw UsageError{"kind root_system, but the poset is not a root system"};
  }
  if (kind == PosetKind::Forest) throw UsageError{"topologies are built for trees and root systems only"};
  return kind;
}

int emit(std::ostream& out, const Report& r, bool timings) {
  out << r.to_json(timings).dump(2) << "\n";
  return r.passed() ? kPass : kVerdictFailed;
}

int cmd_check(const std::string& path, bool timings, std::ostream& out) {
  const std::string text = read_file(path);
  const PosetDocument doc = load_poset(path);
  Report r("check", text);
  verify_structure(r, doc.poset, doc.kind);
  return emit(out, r, timings);
}

int cmd_spectrum(const std::string& path, bool timings, std::ostream& out) {
  std::string text;
  FiniteLattice l;
  try {
    text = read_file(path);
    l = parse_lattice(text);
  } catch (const Error& e) {
    throw UsageError{path + ": " + e.what()};
  }
  Report r("spectrum", text);
  const HeytingAlgebra h = r.timed("heyting", [&] { return heyting_complete(l); });
  const std::vector<PointSet> filters = prime_filters(l);
  const FinitePoset s = spectrum(l);
  Json fs = Json::array();
  for (const PointSet& f : filters) {
    Json members = Json::array();
    f.for_each([&](Element a) { members.push_back(l.label(a)); });
    fs.push_back(std::move(members));
  }
  r.data()["prime_filters"] = std::move(fs);
  r.data()["spectrum"] = poset_to_json(s);
  const GodelVerdict g = is_godel(h);
  const bool root = is_root_system(s);
  r.add("godel", "horn-correspondence", true, g.holds);
  r.add("spectrum_root_system", "horn-correspondence", true, root);
  r.add("horn_correspondence", "horn-correspondence", g.holds == root, g.holds == root);
  try {
    const LatticeDoubleDual d = double_dual_lattice(l);
    const bool ok = is_lattice_iso(l, d.upsets.algebra.lattice(), d.iso);
    r.add("double_dual_lattice", "duality", ok, ok);
  } catch (const Error& e) {
    r.add("double_dual_lattice", "duality", false, nullptr, e.what());
  }
  return emit(out, r, timings);
}

int cmd_dual(const std::string& path, bool timings, std::ostream& out) {
  const std::string text = read_file(path);
  const PosetDocument doc = load_poset(path);
  Report r("dual", text);
  try {
    const SetAlgebra alg = upset_algebra(doc.poset);
    Json d = lattice_to_json(alg.algebra.lattice());
    d["implies"] = alg.algebra.implies_table();
    r.data()["algebra"] = std::move(d);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  verify_algebra(r, doc.poset);
  return emit(out, r, timings);
}

int cmd_topologize(const std::string& path, const std::string& kind_flag, bool timings, std::ostream& out) {
  const std::string text = read_file(path);
  const PosetDocument doc = load_poset(path);
  const PosetKind kind = resolve_kind(doc, kind_flag);
  Report r("topologize", text);
  r.data()["kind"] = to_string(kind);
  FiniteTopology t;
  if (kind == PosetKind::Tree) {
    const StagedTopology st = r.timed("staged_topology", [&] { return staged_topology(doc.poset); });
    r.data()["staged"] = staged_to_json(st);
    t = st.final_topology();
  } else {
    t = r.timed("root_topology", [&] { return root_topology_check(doc.poset).topology; });
  }
  r.data()["topology"] = topology_to_json(doc.poset, t);
  const EsakiaReport es = esakia_check(doc.poset, t);
  r.add("priestley", "priestley-separation", es.priestley, es.priestley);
  r.add("esakia", "esakia-condition", es.holds(), es.holds());
  r.add("discrete", kind == PosetKind::Tree ? "staged-topology" : "root-subbase-topology",
        is_discrete(t), is_discrete(t));
  return emit(out, r, timings);
}

int cmd_subcover(const std::string& path, const std::string& cover_path, const std::string& kind_flag,
                 bool timings, std::ostream& out) {
  const std::string text = read_file(path);
  const PosetDocument doc = load_poset(path);
  const PosetKind kind = resolve_kind(doc, kind_flag);
  std::vector<PointSet> sets;
  try {
    sets = parse_cover(read_file(cover_path), doc.poset);
  } catch (const Error& e) {
    throw UsageError{cover_path + ": " + e.what()};
  }
  Report r("subcover", text);
  r.data()["kind"] = to_string(kind);
  auto record = [&](const std::vector<PointSet>& chosen, std::size_t given) {
    Json js = Json::array();
    for (const PointSet& s : chosen) js.push_back(set_to_json(doc.poset, s));
    r.data()["subcover"] = std::move(js);
    const bool covers = union_of(chosen) == doc.poset.carrier();
    r.add("covers", "subcover-engine", covers, covers);
    r.add("size_bound", "subcover-engine", chosen.size() <= given, static_cast<int>(chosen.size()));
  };

  if (kind == PosetKind::Tree) {
    const StagedTopology st = staged_topology(doc.poset);
    std::vector<int> cover;
    for (const PointSet& s : sets) {
      const int i = st.subbase_index(st.height(), s);
      if (i < 0) throw UsageError{"cover set " + format_set(doc.poset, s) + " is not a subbase member"};
      cover.push_back(i);
    }
    try {
      const SubcoverResult res = r.timed("extract_subcover", [&] { return extract_subcover(st, cover); });
      std::vector<PointSet> chosen;
      for (int i : res.indices) chosen.push_back(st.top().subbase[static_cast<std::size_t>(i)].set);
      record(chosen, sets.size());
      Json trace = Json::array();
      bool law = true;
      for (const CoverState& s : res.trace) {
        Json row;
        row["round"] = s.round;
        row["frontier"] = set_to_json(doc.poset, s.frontier);
        row["family"] = s.family;
        trace.push_back(std::move(row));
        law = law && s.antichain && s.lower_part_covered && s.successor_law;
      }
      r.data()["trace"] = std::move(trace);
      r.add("frontier_laws", "subcover-engine", law, law);
      const bool bounded = res.rounds() <= st.height() + 1;
      r.add("round_bound", "subcover-engine", bounded, res.rounds());
    } catch (const Error& e) {
      r.add("covers", "subcover-engine", false, false, e.what());
    }
  } else {
    const RootTopologyReport rt = root_topology_check(doc.poset);
    std::vector<std::size_t> cover;
    for (const PointSet& s : sets) {
      auto it = std::find(rt.topology.subbase().begin(), rt.topology.subbase().end(), s);
      if (it == rt.topology.subbase().end()) {
        throw UsageError{"cover set " + format_set(doc.poset, s) + " is not a subbase member"};
      }
      cover.push_back(static_cast<std::size_t>(it - rt.topology.subbase().begin()));
    }
    try {
      const auto chosen_idx = subbase_subcover(rt.topology, cover);
      std::vector<PointSet> chosen;
      for (std::size_t i : chosen_idx) chosen.push_back(rt.topology.subbase()[i]);
      record(chosen, sets.size());
    } catch (const Error& e) {
      r.add("covers", "subcover-engine", false, false, e.what());
    }
  }
  return emit(out, r, timings);
}

int cmd_verify(const std::string& path, bool timings, std::ostream& out) {
  const std::string text = read_file(path);
  const PosetDocument doc = load_poset(path);
  return emit(out, verify_poset(doc.poset, text, doc.kind), timings);
}

int cmd_export_dot(const std::string& path, bool with_topology, std::ostream& out) {
  const PosetDocument doc = load_poset(path);
  if (!with_topology) {
    out << export_dot(doc.poset);
    return kPass;
  }
  const FiniteTopology t = resolve_kind(doc, "") == PosetKind::Tree
                               ? staged_topology(doc.poset).final_topology()
                               : root_topology_check(doc.poset).topology;
  out << export_dot(doc.poset, &t);
  return kPass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const char* env_seed) {
  CLI::App app{"Finite order, topology and duality toolkit"};
  app.require_subcommand(1);
  std::string file, cover_file, kind, quarantine, name = "figure1";
  bool no_timings = false, with_topology = false, serial = false;
  FuzzOptions fo;
  int n = 3;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "poset document")->required();
    sub->add_flag("--no-timings", no_timings, "omit wall-clock timings from the report");
    return sub;
  };
  auto* check = with_file(app.add_subcommand("check", "structural recognizers and enough gaps"));
  auto* spectrum_cmd = app.add_subcommand("spectrum", "prime spectrum of a lattice document");
  spectrum_cmd->add_option("file", file, "lattice document")->required();
  spectrum_cmd->add_flag("--no-timings", no_timings, "omit wall-clock timings from the report");
  auto* dual = with_file(app.add_subcommand("dual", "upset algebra of a poset"));
  auto* topo = with_file(app.add_subcommand("topologize", "build and check the subbase topology"));
  topo->add_option("--kind", kind, "tree or root_system")->check(CLI::IsMember({"tree", "root_system"}));
  auto* sub = with_file(app.add_subcommand("subcover", "extract a finite subcover"));
  sub->add_option("--cover", cover_file, "cover document")->required();
  sub->add_option("--kind", kind, "tree or root_system")->check(CLI::IsMember({"tree", "root_system"}));
  auto* verify = with_file(app.add_subcommand("verify", "full property suite on one poset"));
  auto* fz = app.add_subcommand("fuzz", "seeded batch over the generators");
  fz->add_option("--seed", fo.seed, "base seed (ESAKIA_SEED overrides)");
  fz->add_option("--count", fo.count, "number of instances")->check(CLI::NonNegativeNumber);
  fz->add_option("--max-n", fo.max_n, "largest instance size")->check(CLI::Range(1, 7));
  fz->add_option("--quarantine", quarantine, "directory for failing documents");
  fz->add_flag("--no-timings", no_timings, "omit wall-clock timings from the report");
  fz->add_flag("--serial", serial, "run instances on one thread");
  auto* gal = app.add_subcommand("gallery", "emit a named poset document");
  gal->add_option("name", name, "figure1 or figure2")->required();
  gal->add_option("--n", n, "truncation size")->check(CLI::PositiveNumber);
  auto* dot = app.add_subcommand("export-dot", "render a poset as DOT");
  dot->add_option("file", file, "poset document")->required();
  dot->add_flag("--topology", with_topology, "annotate with the subbase topology");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const bool timings = !no_timings;
  try {
    if (*check) return cmd_check(file, timings, out);
    if (*spectrum_cmd) return cmd_spectrum(file, timings, out);
    if (*dual) return cmd_dual(file, timings, out);
    if (*topo) return cmd_topologize(file, kind, timings, out);
    if (*sub) return cmd_subcover(file, cover_file, kind, timings, out);
    if (*verify) return cmd_verify(file, timings, out);
    if (*fz) {
      if (env_seed != nullptr && *env_seed != '\0') {
        try {
          fo.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
          throw UsageError{std::string("ESAKIA_SEED is not an unsigned integer: ") + env_seed};
        }
      }
      if (!quarantine.empty()) fo.quarantine = quarantine;
      fo.exec = serial ? Execution::Serial : Execution::Parallel;
      return emit(out, fuzz(fo), timings);
    }
    if (*gal) {
      const FinitePoset p = gallery(name, n);
      out << emit_poset(p, name == "figure1" ? PosetKind::Tree : PosetKind::RootSystem) << "\n";
      return kPass;
    }
    if (*dot) return cmd_export_dot(file, with_topology, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Input-shape errors (bad documents, unknown names) are usage errors.
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace esakia::cli
