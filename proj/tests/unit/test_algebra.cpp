#include "doctest.h"
#include "esakia/lattice.hpp"
#include "esakia/toolkit/enumerate.hpp"
#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace esakia;
using testing_support::error_of;

namespace {
Table chain_meet(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
  return t;
}
Table chain_join(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::max(a, b);
  return t;
}
// 0 = bottom, 1 = a, 2 = b, 3 = top.
FiniteLattice square() {
  const Table meet{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  const Table join{{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return validate_lattice(meet, join, {"0", "a", "b", "1"});
}
}  // namespace

TEST_CASE("lattice validation") {
  CHECK(validate_lattice(chain_meet(2), chain_join(2)).size() == 2);
  CHECK(validate_lattice(chain_meet(1), chain_join(1)).size() == 1);
  // Diamond with three atoms: a lattice, but not distributive.
  const Table meet{{0, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, 2, 0, 2}, {0, 0, 0, 3, 3}, {0, 1, 2, 3, 4}};
  const Table join{{0, 1, 2, 3, 4}, {1, 1, 4, 4, 4}, {2, 4, 2, 4, 4}, {3, 4, 4, 3, 4}, {4, 4, 4, 4, 4}};
  auto v = find_lattice_violation(meet, join);
  REQUIRE(v.has_value());
  CHECK(v->axiom == "distributivity");
  // The reported triple really breaks the law.
  auto M = [&](int a, int b) { return meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto J = [&](int a, int b) { return join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  CHECK(M(v->a, J(v->b, v->c)) != J(M(v->a, v->b), M(v->a, v->c)));
  CHECK(error_of([&] { validate_lattice(meet, join); }) == ErrorCode::NotDistributive);

  Table bad = chain_meet(3);
  bad[0][1] = 1;
  CHECK(error_of([&] { validate_lattice(bad, chain_join(3)); }) == ErrorCode::NotALattice);
}

TEST_CASE("heyting implication") {
  const HeytingAlgebra b2 = heyting_complete(validate_lattice(chain_meet(2), chain_join(2)));
  CHECK(b2.implies(1, 0) == 0);
  const HeytingAlgebra sq = heyting_complete(square());
  for (int b = 0; b < 4; ++b) CHECK(sq.implies(b, b) == 3);
  for (int c = 0; c < 4; ++c) CHECK(sq.implies(3, c) == c);
  CHECK_FALSE(residuation_violation(sq).has_value());

  const SetAlgebra v = upset_algebra(shapes::vee());
  const int t1 = v.index_of({1});
  const int t2 = v.index_of({2});
  CHECK(v.algebra.implies(t1, t2) == t2);
  CHECK(oracle::implication(v.algebra.lattice(), t1, t2) == t2);
}

TEST_CASE("godel equation") {
  for (int n = 1; n <= 5; ++n) CHECK(is_godel(heyting_complete(validate_lattice(chain_meet(n), chain_join(n)))).holds);
  CHECK(is_godel(upset_algebra(shapes::wedge()).algebra).holds);
  const SetAlgebra v = upset_algebra(shapes::vee());
  const GodelVerdict g = is_godel(v.algebra);
  CHECK_FALSE(g.holds);
  REQUIRE(g.witness.has_value());
  // First failing pair in index order is ({t1}, {t2}).
  CHECK(v.sets[static_cast<std::size_t>(g.witness->first)] == PointSet{1});
  CHECK(v.sets[static_cast<std::size_t>(g.witness->second)] == PointSet{2});
}

TEST_CASE("prime filters and spectrum") {
  const FiniteLattice sq = square();
  CHECK(prime_filters(sq) == std::vector<PointSet>{{1, 3}, {2, 3}});
  CHECK(prime_filters(sq) == oracle::prime_filters(sq));
  const FiniteLattice c3 = validate_lattice(chain_meet(3), chain_join(3));
  CHECK(prime_filters(c3) == std::vector<PointSet>{{2}, {1, 2}});
  CHECK(prime_filters(validate_lattice(chain_meet(1), chain_join(1))).empty());

  const FinitePoset s = spectrum(sq);
  CHECK(s.size() == 2);
  CHECK(s.covers().empty());
  const FinitePoset s3 = spectrum(c3);
  CHECK(s3.size() == 2);
  CHECK(s3.covers().size() == 1);
  CHECK(spectrum(validate_lattice(chain_meet(2), chain_join(2))).size() == 1);
}

TEST_CASE("prime filters match the upset walk on small upset algebras") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const SetAlgebra alg = upset_algebra(p);
      const FiniteLattice& l = alg.algebra.lattice();
      if (l.size() <= 12) CHECK(prime_filters(l) == oracle::prime_filters(l));
    }
}

TEST_CASE("gamma") {
  const FiniteLattice sq = square();
  CHECK(gamma(sq, 1) == PointSet{0});
  CHECK(gamma(sq, 3) == PointSet{0, 1});
  CHECK(gamma(sq, 0).empty());
}

TEST_CASE("upset algebra") {
  const SetAlgebra c2 = upset_algebra(shapes::chain(2));
  CHECK(c2.sets == std::vector<PointSet>{{}, {1}, {0, 1}});
  CHECK(upset_algebra(shapes::vee()).algebra.size() == 5);
  const SetAlgebra a2 = upset_algebra(shapes::antichain(2));
  CHECK(a2.algebra.size() == 4);
  CHECK(prime_filters(a2.algebra.lattice()).size() == 2);
}

TEST_CASE("displayed implication equals the maximum-based one") {
  for (int n = 1; n <= 5; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const SetAlgebra alg = upset_algebra(p);
      const HeytingAlgebra h = heyting_complete(alg.algebra.lattice());
      CHECK(alg.algebra.implies_table() == h.implies_table());
      CHECK_FALSE(residuation_violation(alg.algebra).has_value());
    }
}

TEST_CASE("gamma is an injective bounded lattice homomorphism") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const SetAlgebra alg = upset_algebra(p);
      const FiniteLattice& l = alg.algebra.lattice();
      const auto filters = prime_filters(l);
      CHECK(gamma(filters, l.bottom()).empty());
      CHECK(gamma(filters, l.top()) == PointSet::full(static_cast<int>(filters.size())));
      for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
          CHECK(gamma(filters, l.meet(a, b)) == (gamma(filters, a) & gamma(filters, b)));
          CHECK(gamma(filters, l.join(a, b)) == (gamma(filters, a) | gamma(filters, b)));
          if (a != b) CHECK(gamma(filters, a) != gamma(filters, b));
        }
    }
}

TEST_CASE("size cap") {
  CHECK(error_of([] { validate_lattice(chain_meet(129), chain_join(129)); }) == ErrorCode::SizeCap);
  CHECK(upset_algebra(shapes::antichain(7)).algebra.size() == 128);
}
