#pragma once
// Brute-force reference implementations used only by tests. Each one follows
// the textbook definition as directly as possible and shares no algorithmic
// code with the library beyond the PointSet container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "esakia/constructions/staged.hpp"
#include "esakia/lattice.hpp"
#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"

namespace oracle {

using esakia::Element;
using esakia::PointSet;

/// n×n relation as a row-major bit matrix.
using Relation = std::vector<bool>;

inline bool rel(const Relation& r, int n, int i, int j) { return r[static_cast<std::size_t>(i * n + j)]; }

/// Every partial order on n points has a linear extension, so up to
/// isomorphism it suffices to scan strict relations inside i < j, keep the
/// transitive ones, and deduplicate by the least encoding over all n!
/// relabellings. Returns one canonical code per class.
inline std::set<std::vector<bool>> poset_classes(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation r(static_cast<std::size_t>(n * n), false);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) r[static_cast<std::size_t>(pairs[k].first * n + pairs[k].second)] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (rel(r, n, a, b) && rel(r, n, b, c) && !rel(r, n, a, c)) transitive = false;
    if (!transitive) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> code(static_cast<std::size_t>(n * n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          code[static_cast<std::size_t>(a * n + b)] = rel(r, n, perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes;
}

/// Every isomorphism between two posets, by scanning all bijections.
inline bool isomorphic_by_permutation(const esakia::FinitePoset& p, const esakia::FinitePoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < p.size() && ok; ++a)
      for (int b = 0; b < p.size() && ok; ++b)
        ok = p.leq(a, b) == q.leq(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All subsets of {0..n-1}.
inline std::vector<PointSet> powerset(int n) {
  std::vector<PointSet> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    PointSet s;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

inline bool closed_upward(const esakia::FinitePoset& p, const PointSet& s) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (s.contains(a) && p.leq(a, b) && !s.contains(b)) return false;
  return true;
}

/// Upsets by filtering the powerset.
inline std::vector<PointSet> upsets(const esakia::FinitePoset& p) {
  std::vector<PointSet> out;
  for (const PointSet& s : powerset(p.size()))
    if (closed_upward(p, s)) out.push_back(s);
  esakia::sort_canonical(out);
  return out;
}

/// Base as the intersections of all 2^k subfamilies (empty family = carrier).
inline std::vector<PointSet> subfamily_intersections(const std::vector<PointSet>& subbase, int n) {
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << subbase.size()); ++m) {
    PointSet s = PointSet::full(n);
    for (std::size_t k = 0; k < subbase.size(); ++k)
      if ((m >> k) & 1U) s &= subbase[k];
    out.push_back(s);
  }
  esakia::normalize_family(out);
  return out;
}

/// Opens as all unions of base subfamilies, materialized over the powerset:
/// S is open iff it equals the union of the base sets it contains.
inline std::vector<PointSet> opens(const std::vector<PointSet>& base, int n) {
  std::vector<PointSet> out;
  for (const PointSet& s : powerset(n)) {
    PointSet u;
    for (const PointSet& b : base)
      if (b.subset_of(s)) u |= b;
    if (u == s) out.push_back(s);
  }
  esakia::sort_canonical(out);
  return out;
}

/// Least family with the four closure rules, iterated naively to a fixpoint
/// with full pairwise intersections and unions each round.
inline std::vector<PointSet> order_open_sets(const esakia::FinitePoset& p) {
  const int n = p.size();
  const PointSet full = PointSet::full(n);
  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  std::vector<PointSet> fam;
  auto add = [&](const PointSet& s) {
    if (keys.insert({s.word(0), s.word(1)}).second) fam.push_back(s);
  };
  add(full);
  for (int x = 0; x < n; ++x) add(full - PointSet::singleton(x));
  for (bool grew = true; grew;) {
    const std::size_t before = fam.size();
    const std::vector<PointSet> snapshot = fam;
    for (const PointSet& u : snapshot) {
      PointSet up;
      PointSet down;
      (full - u).for_each([&](Element y) {
        for (int z = 0; z < n; ++z) {
          if (p.leq(y, z)) up.insert(z);
          if (p.leq(z, y)) down.insert(z);
        }
      });
      add(full - up);
      add(full - down);
      for (const PointSet& w : snapshot) {
        add(u & w);
        add(u | w);
      }
    }
    grew = fam.size() != before;
  }
  esakia::sort_canonical(fam);
  return fam;
}

/// Prime filters by walking every subset of the lattice carrier.
inline std::vector<PointSet> prime_filters(const esakia::FiniteLattice& l) {
  std::vector<PointSet> out;
  const int n = l.size();
  for (const PointSet& f : powerset(n)) {
    if (f.empty() || f.size() == n) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (f.contains(a) && l.leq(a, b) && !f.contains(b)) ok = false;
        if (f.contains(a) && f.contains(b) && !f.contains(l.meet(a, b))) ok = false;
        if (f.contains(l.join(a, b)) && !f.contains(a) && !f.contains(b)) ok = false;
      }
    if (ok) out.push_back(f);
  }
  esakia::sort_canonical(out);
  return out;
}

/// b → c as the greatest a with a ∧ b ≤ c, found by scanning.
inline int implication(const esakia::FiniteLattice& l, int b, int c) {
  int best = -1;
  for (int a = 0; a < l.size(); ++a) {
    if (!l.leq(l.meet(a, b), c)) continue;
    bool above_all = true;
    for (int d = 0; d < l.size(); ++d)
      if (l.leq(l.meet(d, b), c) && !l.leq(d, a)) above_all = false;
    if (above_all) best = a;
  }
  return best;
}

struct Triple {
  Element v;
  PointSet y;
  PointSet z;
};

/// Every (v, Y, Z) meeting the witness constraints for (x, α, U).
inline std::vector<Triple> witness_triples(const esakia::StagedTopology& st, Element x, int alpha,
                                           const PointSet& u) {
  const auto& t = st.tree();
  const auto& h = st.heights();
  std::vector<Triple> out;
  auto subsets = [](const PointSet& s) {
    std::vector<PointSet> subs;
    const auto m = s.members();
    for (std::uint32_t k = 0; k < (1U << m.size()); ++k) {
      PointSet sub;
      for (std::size_t i = 0; i < m.size(); ++i)
        if ((k >> i) & 1U) sub.insert(m[i]);
      subs.push_back(sub);
    }
    return subs;
  };
  auto up_to = [&](const PointSet& s) {
    PointSet out;
    for (int a = 0; a < t.size(); ++a)
      for (int b = 0; b < t.size(); ++b)
        if (s.contains(a) && t.leq(a, b) && h(b) <= alpha) out.insert(b);
    return out;
  };
  auto down = [&](const PointSet& s) {
    PointSet out;
    for (int a = 0; a < t.size(); ++a)
      for (int b = 0; b < t.size(); ++b)
        if (s.contains(a) && t.leq(b, a)) out.insert(b);
    return out;
  };
  for (Element v = 0; v < t.size(); ++v) {
    if (!t.leq(v, x)) continue;
    const PointSet up_v = up_to(PointSet::singleton(v));
    PointSet y_range;
    PointSet z_range;
    for (int w = 0; w < t.size(); ++w) {
      if (up_v.contains(w) && h(w) > h(x)) y_range.insert(w);
      if (t.leq(v, w) && h(w) < alpha) z_range.insert(w);
    }
    for (const PointSet& y : subsets(y_range))
      for (const PointSet& z : subsets(z_range))
        if ((up_v - up_to(y) - down(z)).subset_of(u)) out.push_back({v, y, z});
  }
  return out;
}

}  // namespace oracle
