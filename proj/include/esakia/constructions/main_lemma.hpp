#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "esakia/constructions/staged.hpp"

namespace esakia {

/// v ≤ x, Y ⊆ X_{>ĥ(x)} ∩ ↑_α v, Z ⊆ X_{<α} ∩ ↑v with
/// ↑_α v ∖ (↑_α Y ∪ ↓Z) ⊆ U.
struct MainLemmaWitness {
  Element v = 0;
  PointSet y;
  PointSet z;
  int level = 0;
};

/// Whether `w` meets every constraint for (x, α, U).
bool witness_valid(const StagedTopology& st, Element x, int alpha, const PointSet& u,
                   const MainLemmaWitness& w);

/// Memoizing witness builder for one staged topology. The recursion descends
/// one level at a time: U is split into its shifted form (V, Z̄), V is
/// narrowed to a few subbase sets around f_x(α-1), and the witnesses for those
/// sets are merged under their largest v.
class MainLemmaSolver {
 public:
  explicit MainLemmaSolver(const StagedTopology& st) : st_(st) {}

  /// Requires ĥ(x) ≤ α ≤ ĥ(X) and U ∈ 𝒮_α. Throws PreconditionFxNotInU when
  /// f_x(α) ∉ U, InternalInvariant if a step of the construction fails.
  const MainLemmaWitness& witness(Element x, int alpha, const PointSet& u);
  const MainLemmaWitness& witness(Element x, int alpha, int subbase_index);

  /// Subbase sets of 𝒮_γ used to cover the neighbourhood of `point` inside
  /// `v`: all sets containing the point, greedily pruned while the
  /// intersection stays inside `v`. Never empty.
  std::vector<PointSet> narrow(int gamma, Element point, const PointSet& v) const;

 private:
  MainLemmaWitness build(Element x, int alpha, const PointSet& u);

  const StagedTopology& st_;
  std::map<std::tuple<Element, int, std::uint64_t, std::uint64_t>, MainLemmaWitness> memo_;
};

MainLemmaWitness main_lemma_witness(const StagedTopology& st, Element x, int alpha, int subbase_index);

}  // namespace esakia
