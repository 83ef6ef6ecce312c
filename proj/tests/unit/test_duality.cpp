#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "esakia/duality.hpp"
#include "esakia/toolkit/enumerate.hpp"
#include "esakia/toolkit/random.hpp"
#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace esakia;
using testing_support::error_of;

namespace {
FinitePoset relabel(const FinitePoset& p, const std::vector<Element>& perm) {
  std::vector<Cover> covers;
  for (const Cover& c : p.covers()) covers.push_back({perm[static_cast<std::size_t>(c.lower)],
                                                      perm[static_cast<std::size_t>(c.upper)]});
  return FinitePoset::from_covers(p.size(), covers);
}

bool godel_by_scan(const FiniteLattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.join(oracle::implication(l, a, b), oracle::implication(l, b, a)) != l.top()) return false;
  return true;
}
}  // namespace

TEST_CASE("poset isomorphism across classes") {
  for (int n = 1; n <= 5; ++n) {
    const auto& classes = enumerate_posets(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const auto iso = poset_isomorphism(classes[i], classes[j]);
        CHECK(iso.has_value() == (i == j));
        if (iso) CHECK(is_poset_iso(classes[i], classes[j], *iso));
      }
  }
}

TEST_CASE("poset isomorphism survives relabelling") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 7));
    const FinitePoset p = random_poset(rng(), n, 0.35);
    std::vector<Element> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = n - 1; k > 0; --k)
      std::swap(perm[static_cast<std::size_t>(k)], perm[uniform_below(rng, static_cast<std::uint64_t>(k) + 1)]);
    const FinitePoset q = relabel(p, perm);
    const auto iso = poset_isomorphism(p, q);
    REQUIRE(iso.has_value());
    CHECK(is_poset_iso(p, q, *iso));
    CHECK(oracle::isomorphic_by_permutation(p, q));
  }
}

TEST_CASE("poset isomorphism agrees with permutation search on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const FinitePoset p = random_poset(rng(), n, 0.4);
    const FinitePoset q = random_poset(rng(), n, 0.4);
    CHECK(poset_isomorphism(p, q).has_value() == oracle::isomorphic_by_permutation(p, q));
  }
}

TEST_CASE("iso validator rejects non-isomorphisms") {
  const FinitePoset c2 = shapes::chain(2);
  CHECK_FALSE(is_poset_iso(c2, c2, PosetIso{{1, 0}, {1, 0}}));
  CHECK_FALSE(is_poset_iso(c2, c2, PosetIso{{0, 0}, {0, 1}}));
  CHECK(is_poset_iso(c2, c2, PosetIso{{0, 1}, {0, 1}}));
  CHECK_FALSE(poset_isomorphism(c2, shapes::antichain(2)).has_value());
  CHECK_FALSE(poset_isomorphism(c2, shapes::chain(3)).has_value());
}

TEST_CASE("poset double dual") {
  const PosetDoubleDual v = double_dual_poset(shapes::vee());
  CHECK(v.algebra.sets.size() == 5);
  CHECK(v.filters.size() == 3);
  CHECK(is_poset_iso(shapes::vee(), v.spectrum, v.iso));
  for (int n = 1; n <= 5; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const PosetDoubleDual d = double_dual_poset(p);
      CHECK(d.spectrum.size() == p.size());
      CHECK(is_poset_iso(p, d.spectrum, d.iso));
      // The map sends x to the prime filter of upsets containing x.
      for (Element x = 0; x < p.size(); ++x) {
        PointSet expected;
        for (std::size_t i = 0; i < d.algebra.sets.size(); ++i)
          if (d.algebra.sets[i].contains(x)) expected.insert(static_cast<Element>(i));
        CHECK(d.filters[static_cast<std::size_t>(d.iso.forward[static_cast<std::size_t>(x)])] == expected);
      }
    }
}

TEST_CASE("lattice double dual") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const SetAlgebra alg = upset_algebra(p);
      const LatticeDoubleDual d = double_dual_lattice(alg.algebra.lattice());
      CHECK(is_lattice_iso(alg.algebra.lattice(), d.upsets.algebra.lattice(), d.iso));
      CHECK(poset_isomorphism(d.spectrum, p).has_value());
    }
  const SetAlgebra c = upset_algebra(shapes::chain(3));
  const LatticeDoubleDual d = double_dual_lattice(c.algebra.lattice());
  CHECK(d.filters.size() == 3);
  CHECK(d.upsets.sets.size() == 4);
}

TEST_CASE("lattice isomorphism") {
  const FiniteLattice a = upset_algebra(shapes::antichain(2)).algebra.lattice();
  const FiniteLattice b = upset_algebra(shapes::antichain(2)).algebra.lattice();
  const auto iso = lattice_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(is_lattice_iso(a, b, *iso));
  const FiniteLattice c4 = upset_algebra(shapes::chain(3)).algebra.lattice();
  CHECK_FALSE(lattice_isomorphism(a, c4).has_value());
}

TEST_CASE("horn verification") {
  CHECK(horn_verify(shapes::chain(3)));
  CHECK(horn_verify(shapes::wedge()));
  CHECK_FALSE(horn_verify(shapes::vee()));
  CHECK(horn_verify(shapes::antichain(3)));
  for (int n = 1; n <= 6; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const SetAlgebra alg = upset_algebra(p);
      const bool scanned = godel_by_scan(alg.algebra.lattice());
      CHECK(horn_verify(p) == scanned);
      CHECK(is_root_system(p) == scanned);
    }
}
