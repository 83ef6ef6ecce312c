// Runs the ten acceptance criteria on exhaustive or seeded finite instances
// and prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "esakia/constructions/compactness.hpp"
#include "esakia/constructions/main_lemma.hpp"
#include "esakia/constructions/root_subbase.hpp"
#include "esakia/constructions/separation.hpp"
#include "esakia/constructions/staged.hpp"
#include "esakia/duality.hpp"
#include "esakia/error.hpp"
#include "esakia/order_open.hpp"
#include "esakia/parallel/sweep.hpp"
#include "esakia/toolkit/enumerate.hpp"
#include "esakia/toolkit/random.hpp"
#include "oracles/oracles.hpp"

using namespace esakia;

namespace {

/// Outcome of one instance: how many checks ran and the first failure.
struct Tally {
  long checks = 0;
  std::string failure;
  bool ok() const { return failure.empty(); }
  void fail(std::string why) {
    if (failure.empty()) failure = std::move(why);
  }
};

Tally merge(const std::vector<Tally>& parts) {
  Tally out;
  for (const Tally& t : parts) {
    out.checks += t.checks;
    if (!t.ok()) out.fail(t.failure);
  }
  return out;
}

/// Runs f over every instance in parallel, turning library errors into failures.
template <typename T, typename F>
Tally over(const std::vector<T>& items, F&& f) {
  return merge(sweep<Tally>(items.size(), [&](std::size_t i) {
    Tally t;
    try {
      f(items[i], t);
    } catch (const std::exception& e) {
      t.fail(std::string("instance ") + std::to_string(i) + ": " + e.what());
    }
    return t;
  }));
}

std::vector<FinitePoset> classes_up_to(int n, const std::function<bool(const FinitePoset&)>& keep) {
  std::vector<FinitePoset> out;
  for (int k = 1; k <= n; ++k)
    for (const FinitePoset& p : enumerate_posets(k))
      if (keep(p)) out.push_back(p);
  return out;
}

std::vector<FinitePoset> all_up_to(int n) {
  return classes_up_to(n, [](const FinitePoset&) { return true; });
}
std::vector<FinitePoset> trees_up_to(int n) { return classes_up_to(n, is_tree); }

std::string text(const FinitePoset& p) {
  std::string out = "n=" + std::to_string(p.size()) + " covers";
  for (const Cover& c : p.covers()) out += " " + std::to_string(c.lower) + "<" + std::to_string(c.upper);
  return out;
}

// ---------------------------------------------------------------------------

Tally duality_round_trip() {
  return over(all_up_to(6), [](const FinitePoset& p, Tally& t) {
    const PosetDoubleDual d = double_dual_poset(p);
    if (!is_poset_iso(p, d.spectrum, d.iso)) t.fail("poset double dual " + text(p));
    const SetAlgebra alg = upset_algebra(p);
    const LatticeDoubleDual l = double_dual_lattice(alg.algebra.lattice());
    if (!is_lattice_iso(alg.algebra.lattice(), l.upsets.algebra.lattice(), l.iso)) {
      t.fail("lattice double dual " + text(p));
    }
    t.checks += 2;
  });
}

Tally horn_correspondence() {
  return over(all_up_to(6), [](const FinitePoset& p, Tally& t) {
    const bool godel = is_godel(upset_algebra(p).algebra).holds;
    if (godel != is_root_system(p)) t.fail("Gödel equation disagrees with root-system test on " + text(p));
    ++t.checks;
  });
}

Tally root_system_topology() {
  return over(classes_up_to(7, is_root_system), [](const FinitePoset& p, Tally& t) {
    const RootTopologyReport r = root_topology_check(p);
    if (!r.esakia.priestley) t.fail("not Priestley: " + text(p));
    if (!r.esakia.holds()) t.fail("not Esakia: " + text(p));
    if (!r.discrete) t.fail("not discrete: " + text(p));
    const SetAlgebra alg = clopen_upset_algebra(p, r.topology);
    if (!poset_isomorphism(spectrum(alg.algebra.lattice()), p)) t.fail("spectrum differs: " + text(p));
    t.checks += 4;
  });
}

void check_staged(const FinitePoset& tree, const PlusChoice& choice, Tally& t) {
  const StagedTopology st = staged_topology(tree, choice);
  const EsakiaReport es = esakia_check(tree, st.final_topology());
  if (!es.priestley) t.fail("not Priestley: " + text(tree));
  if (!es.holds()) t.fail("not Esakia: " + text(tree));
  if (!is_discrete(st.final_topology())) t.fail("not discrete: " + text(tree));
  t.checks += 3;
  for (int alpha = 1; alpha <= st.height(); ++alpha)
    for (int beta = 0; beta < alpha; ++beta)
      for (const PointSet& u : st.level(beta).opens) {
        ++t.checks;
        if (!shifted_open_in_subbase(st, beta, alpha, u)) {
          t.fail("shifted open missing at level " + std::to_string(alpha) + ": " + text(tree));
        }
      }
}

Tally staged_construction() {
  Tally defaults = over(trees_up_to(7), [](const FinitePoset& p, Tally& t) { check_staged(p, {}, t); });
  std::vector<std::pair<FinitePoset, PlusChoice>> all;
  for (const FinitePoset& p : trees_up_to(5))
    for (const PlusChoice& c : all_plus_choices(p)) all.emplace_back(p, c);
  Tally choices = over(all, [](const auto& item, Tally& t) { check_staged(item.first, item.second, t); });
  return merge({defaults, choices});
}

Tally climb_laws() {
  return over(trees_up_to(7), [](const FinitePoset& p, Tally& t) {
    const StagedTopology st = staged_topology(p);
    for (Element x = 0; x < p.size(); ++x) {
      const ClimbLaws laws = check_climb(st, climb(st, x));
      t.checks += 3;
      if (!laws.order_preserving) t.fail("climb not order preserving: " + text(p));
      if (!laws.maximal) t.fail("climb leaves the maximal points: " + text(p));
      if (!laws.avoids_singletons) t.fail("climb lands in a singleton slice: " + text(p));
    }
  });
}

Tally main_lemma() {
  return over(trees_up_to(5), [](const FinitePoset& p, Tally& t) {
    const StagedTopology st = staged_topology(p);
    MainLemmaSolver solver(st);
    for (Element x = 0; x < p.size(); ++x) {
      const Climb c = climb(st, x);
      for (int alpha = std::max(1, c.start); alpha <= st.height(); ++alpha) {
        const auto& sub = st.level(alpha).subbase;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          const PointSet& u = sub[i].set;
          if (!u.contains(c.at(alpha))) continue;
          ++t.checks;
          const MainLemmaWitness& w = solver.witness(x, alpha, static_cast<int>(i));
          if (!witness_valid(st, x, alpha, u, w)) t.fail("invalid witness: " + text(p));
          const auto feasible = oracle::witness_triples(st, x, alpha, u);
          bool found = false;
          for (const oracle::Triple& tr : feasible) found = found || (tr.v == w.v && tr.y == w.y && tr.z == w.z);
          if (!found) t.fail("witness outside the exhaustive feasible set: " + text(p));
        }
      }
    }
  });
}

constexpr int kCoversPerTree = 500;
constexpr int kMaxCoverSize = 6;

/// A seeded cover of at most kMaxCoverSize top-level subbase sets: random
/// members, then members around uncovered points, restarting on overflow.
std::vector<int> seeded_cover(const StagedTopology& st, std::mt19937_64& rng) {
  const auto& sub = st.top().subbase;
  const PointSet carrier = st.tree().carrier();
  for (;;) {
    std::vector<int> cover;
    PointSet covered;
    auto take = [&](int i) {
      if (std::find(cover.begin(), cover.end(), i) != cover.end()) return;
      cover.push_back(i);
      covered |= sub[static_cast<std::size_t>(i)].set;
    };
    const int seeds = static_cast<int>(uniform_below(rng, kMaxCoverSize));
    for (int k = 0; k < seeds; ++k) take(static_cast<int>(uniform_below(rng, sub.size())));
    while (covered != carrier && static_cast<int>(cover.size()) < kMaxCoverSize) {
      const Element missing = (carrier - covered).min();
      std::vector<int> around;
      for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i].set.contains(missing)) around.push_back(static_cast<int>(i));
      take(around[uniform_below(rng, around.size())]);
    }
    if (covered == carrier) return cover;
  }
}

Tally compactness_engine() {
  const std::vector<FinitePoset> trees = trees_up_to(5);
  std::vector<std::size_t> ids(trees.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return over(ids, [&](std::size_t id, Tally& t) {
    const FinitePoset& p = trees[id];
    const StagedTopology st = staged_topology(p);
    std::mt19937_64 rng(0x5eed0000 + id);
    for (int k = 0; k < kCoversPerTree; ++k) {
      const std::vector<int> cover = seeded_cover(st, rng);
      const SubcoverResult res = extract_subcover(st, cover);
      ++t.checks;
      if (res.rounds() > st.height() + 1) t.fail("too many rounds: " + text(p));
      if (!res.all_checks_hold()) t.fail("frontier law broken: " + text(p));
      PointSet got;
      for (int i : res.indices) {
        if (std::find(cover.begin(), cover.end(), i) == cover.end()) t.fail("member outside the cover: " + text(p));
        got |= st.top().subbase[static_cast<std::size_t>(i)].set;
      }
      if (got != p.carrier()) t.fail("result does not cover: " + text(p));
      if (res.indices.size() > cover.size()) t.fail("result larger than the cover: " + text(p));
    }
  });
}

Tally separation_and_downsets() {
  return over(trees_up_to(7), [](const FinitePoset& p, Tally& t) {
    const StagedTopology st = staged_topology(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) continue;
        ++t.checks;
        const PointSet s = separation_witness(st, x, y);
        if (!s.contains(x) || s.contains(y) || !is_upset(p, s) || !is_clopen(st.final_topology(), s)) {
          t.fail("bad separator: " + text(p));
        }
      }
    ++t.checks;
    if (!downset_open_check(st).holds()) t.fail("downset of an open set not open: " + text(p));
  });
}

constexpr int kOrderCoversPerSize = 200;

Tally order_open_machinery() {
  Tally lemma = over(all_up_to(6), [](const FinitePoset& p, Tally& t) {
    const OrderOpenFamily fam = order_open_family(p);
    const auto subsets = oracle::powerset(p.size());
    for (const PointSet& y : subsets)
      for (const PointSet& z : subsets) {
        ++t.checks;
        if (!updown_complement_is_order_open(p, fam, y, z)) t.fail("(↑Y ∩ ↓Z)ᶜ not order-open: " + text(p));
      }
  });
  std::vector<int> sizes{1, 2, 3, 4, 5, 6};
  Tally covers = over(sizes, [](int n, Tally& t) {
    std::mt19937_64 rng(0xc0e7 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < kOrderCoversPerSize; ++k) {
      const FinitePoset p = random_poset(rng(), n, uniform_unit(rng));
      const std::vector<PointSet> family = order_open_family(p).sets();
      std::vector<PointSet> cover;
      PointSet covered;
      const int extra = static_cast<int>(uniform_below(rng, 4));
      for (int e = 0; e < extra; ++e) {
        cover.push_back(family[uniform_below(rng, family.size())]);
        covered |= cover.back();
      }
      while (covered != p.carrier()) {
        const Element missing = (p.carrier() - covered).min();
        std::vector<PointSet> around;
        for (const PointSet& s : family)
          if (s.contains(missing)) around.push_back(s);
        cover.push_back(around[uniform_below(rng, around.size())]);
        covered |= cover.back();
      }
      ++t.checks;
      const std::vector<PointSet> sub = order_subcover(p, cover);
      if (union_of(sub) != p.carrier()) t.fail("order subcover does not cover: " + text(p));
      for (const PointSet& s : sub)
        if (std::find(cover.begin(), cover.end(), s) == cover.end()) t.fail("order subcover leaves the cover: " + text(p));
    }
  });
  return merge({lemma, covers});
}

Tally enumerator_sanity() {
  Tally t;
  const std::size_t known[] = {0, 1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) {
    const std::size_t oracle_count = oracle::poset_classes(n).size();
    const std::size_t got = enumerate_posets(n).size();
    t.checks += 2;
    if (oracle_count != known[n]) t.fail("oracle count " + std::to_string(oracle_count) + " at n=" + std::to_string(n));
    if (got != oracle_count) t.fail("enumerator count " + std::to_string(got) + " at n=" + std::to_string(n));
  }
  return t;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Tally (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {1, "duality round-trip, n <= 6", 120, duality_round_trip},
      {2, "prelinearity iff root system, n <= 6", 60, horn_correspondence},
      {3, "root-system subbase topology, n <= 7", 300, root_system_topology},
      {4, "staged topology on trees, n <= 7 (all choices n <= 5)", 600, staged_construction},
      {5, "climb laws, trees n <= 7", 60, climb_laws},
      {6, "(v, Y, Z) witnesses vs exhaustive oracle, trees n <= 5", 600, main_lemma},
      {7, "subcover engine, 500 covers per tree n <= 5", 600, compactness_engine},
      {8, "separation and downset openness, trees n <= 7", 120, separation_and_downsets},
      {9, "order-open sets and order subcovers, n <= 6", 300, order_open_machinery},
      {10, "poset class counts 1, 2, 5, 16, 63, 318", 120, enumerator_sanity},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  std::printf("acceptance: %d worker threads\n", sweep_threads());
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && only.count(c.id) == 0) continue;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.fail(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (t.ok() && secs > c.limit_seconds) t.fail("exceeded the runtime bound");
    if (!t.ok()) ++failed;
    std::printf("criterion %2d %s  %-58s %9ld checks  %7.2fs / %4.0fs%s%s\n", c.id, t.ok() ? "PASS" : "FAIL",
                c.name, t.checks, secs, c.limit_seconds, t.ok() ? "" : "  ", t.failure.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", failed == 0 ? "all criteria pass" : (std::to_string(failed) + " failing").c_str());
  return failed == 0 ? 0 : 1;
}
