#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "esakia/parallel/sweep.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// Isomorphism-invariant key: the sorted per-element profiles plus the least
/// order-matrix encoding over orderings that keep profiles sorted.
struct CanonicalForm {
  std::vector<std::array<int, 4>> profiles;
  std::uint64_t code = 0;
  std::vector<Element> order;  // the ordering achieving `code`
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.profiles == b.profiles && a.code == b.code;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.profiles != b.profiles ? a.profiles < b.profiles : a.code < b.code;
  }
};

/// Requires n ≤ 8 (the matrix must fit in 64 bits).
CanonicalForm canonical_form(const FinitePoset& p);

/// P relabelled along its canonical ordering.
FinitePoset canonical_representative(const FinitePoset& p);

/// One representative per isomorphism class of n-element posets, in order of
/// canonical form. Classes are built by adding a new maximal element over
/// every downset of each (n-1)-element class. Results are cached per n.
/// Throws SizeCap unless 0 ≤ n ≤ 7.
const std::vector<FinitePoset>& enumerate_posets(int n, Execution exec = Execution::Parallel);

/// Uncached variant used to compare the serial and parallel paths.
std::vector<FinitePoset> enumerate_posets_uncached(int n, Execution exec);

/// Representatives for every size 1..n, concatenated.
std::vector<FinitePoset> enumerate_posets_up_to(int n, Execution exec = Execution::Parallel);

}  // namespace esakia
