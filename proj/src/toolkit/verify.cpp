#include "esakia/toolkit/verify.hpp"

#include "esakia/constructions/compactness.hpp"
#include "esakia/constructions/main_lemma.hpp"
#include "esakia/constructions/root_subbase.hpp"
#include "esakia/constructions/separation.hpp"
#include "esakia/duality.hpp"
#include "esakia/error.hpp"

namespace esakia {

namespace {

/// Runs a check that returns its own verdict; library errors become failures.
template <typename F>
void guarded(Report& r, const std::string& name, const std::string& anchor, F&& f) {
  try {
    r.add(f());
  } catch (const Error& e) {
    r.add(name, anchor, false, nullptr, e.what());
  }
}

Verdict verdict(std::string name, std::string anchor, bool pass, Json value = nullptr,
                std::string detail = {}) {
  return {std::move(name), std::move(anchor), pass, std::move(value), std::move(detail)};
}

std::string pair_text(const FinitePoset& p, Element x, Element y) {
  return "(" + p.label(x) + ", " + p.label(y) + ")";
}

}  // namespace

void verify_structure(Report& r, const FinitePoset& p, std::optional<PosetKind> kind) {
  const bool tree = is_tree(p);
  const bool forest = is_forest(p);
  const bool root = is_root_system(p);
  r.add("tree", "structure", true, tree);
  r.add("forest", "structure", true, forest);
  r.add("root_system", "structure", true, root);
  const WellOrderedVerdict wo = is_well_ordered(p);
  r.add("well_ordered", "structure", true, wo.value, wo.note);
  const GapsReport gaps = has_enough_gaps(p);
  r.add("enough_gaps", "enough-gaps", gaps.holds, gaps.holds);
  if (kind) {
    const bool ok = (*kind == PosetKind::Tree && tree) || (*kind == PosetKind::Forest && forest) ||
                    (*kind == PosetKind::RootSystem && root);
    r.add("kind_hint", "structure", ok, to_string(*kind),
          ok ? "" : "document kind does not match the order");
  }
}

void verify_algebra(Report& r, const FinitePoset& p) {
  SetAlgebra alg;
  try {
    alg = upset_algebra(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationLimit && e.code() != ErrorCode::SizeCap) throw;
    r.add("upset_algebra", "duality", true, nullptr, std::string("skipped: ") + e.what());
    return;
  }
  r.data()["upset_algebra_size"] = alg.algebra.size();
  const auto res = residuation_violation(alg.algebra);
  r.add("residuation", "heyting-implication", !res.has_value(), !res.has_value());
  const GodelVerdict g = is_godel(alg.algebra);
  const bool root = is_root_system(p);
  r.add("godel", "horn-correspondence", true, g.holds);
  r.add("horn_correspondence", "horn-correspondence", g.holds == root, g.holds == root,
        g.holds == root ? "" : "Gödel equation and root-system recognizer disagree");
  guarded(r, "double_dual_poset", "duality", [&] {
    const PosetDoubleDual d = double_dual_poset(p);
    const bool ok = is_poset_iso(p, d.spectrum, d.iso);
    return verdict("double_dual_poset", "duality", ok, ok);
  });
  guarded(r, "double_dual_lattice", "duality", [&] {
    const LatticeDoubleDual d = double_dual_lattice(alg.algebra.lattice());
    const bool ok = is_lattice_iso(alg.algebra.lattice(), d.upsets.algebra.lattice(), d.iso);
    return verdict("double_dual_lattice", "duality", ok, ok);
  });
}

void verify_root_topology(Report& r, const FinitePoset& p) {
  guarded(r, "root_topology", "root-subbase-topology", [&] {
    const RootTopologyReport rt = r.timed("root_topology", [&] { return root_topology_check(p); });
    r.data()["root_topology"] = topology_to_json(p, rt.topology);
    r.add("root_priestley", "priestley-separation", rt.esakia.priestley, rt.esakia.priestley);
    r.add("root_esakia", "esakia-condition", rt.esakia.holds(), rt.esakia.holds());
    r.add("root_discrete", "root-subbase-topology", rt.discrete, rt.discrete);
    const SetAlgebra alg = clopen_upset_algebra(p, rt.topology);
    const bool iso = poset_isomorphism(spectrum(alg.algebra.lattice()), p).has_value();
    return verdict("root_spectrum_recovers_poset", "duality", iso, iso);
  });
}

void verify_staged(Report& r, const FinitePoset& tree, const PlusChoice& choice) {
  StagedTopology st;
  try {
    st = r.timed("staged_topology", [&] { return staged_topology(tree, choice); });
  } catch (const Error& e) {
    r.add("staged_topology", "staged-topology", false, nullptr, e.what());
    return;
  }
  r.data()["staged"] = staged_to_json(st);
  const FiniteTopology& top = st.final_topology();
  const EsakiaReport es = esakia_check(tree, top);
  r.add("staged_priestley", "priestley-separation", es.priestley, es.priestley);
  r.add("staged_esakia", "esakia-condition", es.holds(), es.holds());
  r.add("staged_discrete", "staged-topology", is_discrete(top), is_discrete(top));

  guarded(r, "staged_open_preservation", "staged-open-preservation", [&] {
    long checked = 0;
    for (int alpha = 1; alpha <= st.height(); ++alpha)
      for (int beta = 0; beta < alpha; ++beta)
        for (const PointSet& u : st.level(beta).opens) {
          ++checked;
          if (!shifted_open_in_subbase(st, beta, alpha, u)) {
            return verdict("staged_open_preservation", "staged-open-preservation", false, checked,
                           "shift of " + format_set(tree, u) + " from level " + std::to_string(beta) +
                               " missing at level " + std::to_string(alpha));
          }
        }
    return verdict("staged_open_preservation", "staged-open-preservation", true, checked);
  });

  guarded(r, "climb_laws", "climb-laws", [&] {
    for (Element x = 0; x < tree.size(); ++x) {
      const ClimbLaws laws = check_climb(st, climb(st, x));
      if (!laws.holds()) return verdict("climb_laws", "climb-laws", false, tree.label(x));
    }
    return verdict("climb_laws", "climb-laws", true, tree.size());
  });

  guarded(r, "main_lemma", "main-lemma-containment", [&] {
    MainLemmaSolver solver(st);
    long checked = 0;
    for (Element x = 0; x < tree.size(); ++x) {
      const Climb c = climb(st, x);
      for (int alpha = c.start; alpha <= st.height(); ++alpha) {
        const auto& sub = st.level(alpha).subbase;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          if (!sub[i].set.contains(c.at(alpha))) continue;
          ++checked;
          if (!witness_valid(st, x, alpha, sub[i].set, solver.witness(x, alpha, static_cast<int>(i)))) {
            return verdict("main_lemma", "main-lemma-containment", false, checked,
                           "invalid witness for " + tree.label(x) + " at level " + std::to_string(alpha));
          }
        }
      }
    }
    return verdict("main_lemma", "main-lemma-containment", true, checked);
  });

  guarded(r, "subcover_engine", "subcover-engine", [&] {
    std::vector<int> cover;
    for (std::size_t i = 0; i < st.top().subbase.size(); ++i) cover.push_back(static_cast<int>(i));
    const SubcoverResult res = extract_subcover(st, cover);
    const bool ok = res.all_checks_hold() && res.rounds() <= st.height() + 1;
    return verdict("subcover_engine", "subcover-engine", ok, res.rounds());
  });

  guarded(r, "separation", "clopen-separation", [&] {
    long checked = 0;
    for (Element x = 0; x < tree.size(); ++x)
      for (Element y = 0; y < tree.size(); ++y) {
        if (tree.leq(x, y)) continue;
        ++checked;
        const PointSet s = separation_witness(st, x, y);
        if (!s.contains(x) || s.contains(y) || !is_upset(tree, s) || !is_clopen(top, s)) {
          return verdict("separation", "clopen-separation", false, checked, "bad separator for " + pair_text(tree, x, y));
        }
      }
    return verdict("separation", "clopen-separation", true, checked);
  });

  guarded(r, "downset_openness", "downset-openness", [&] {
    const DownsetOpenReport d = downset_open_check(st);
    return verdict("downset_openness", "downset-openness", d.holds(), d.holds());
  });
}

Report verify_poset(const FinitePoset& p, std::string_view input, std::optional<PosetKind> kind) {
  Report r("verify", input);
  r.data()["size"] = p.size();
  verify_structure(r, p, kind);
  verify_algebra(r, p);
  if (is_root_system(p)) verify_root_topology(r, p);
  if (is_tree(p)) verify_staged(r, p);
  return r;
}

}  // namespace esakia
