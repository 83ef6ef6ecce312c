#pragma once

#include <vector>

#include "esakia/constructions/main_lemma.hpp"
#include "esakia/constructions/staged.hpp"

namespace esakia {

/// Data the engine attaches to a point x of some frontier: U_x is the first
/// cover member containing f_x(ĥ(X)), (v, Y, Z) its witness, and 𝒱_x a
/// subfamily of the cover covering ↓x.
struct PointData {
  Element x = 0;
  int u = 0;  // subbase index
  MainLemmaWitness witness;
  std::vector<int> down_cover;  // subbase indices
};

/// One round: the frontier F (an antichain) and the accumulated family 𝒰.
struct CoverState {
  int round = 0;
  PointSet frontier;
  std::vector<int> family;  // subbase indices, ascending
  std::vector<PointData> points;  // data for the previous frontier's points
  bool antichain = true;
  /// Points outside ↑F are covered by the family.
  bool lower_part_covered = true;
  /// F ⊆ ↑F' ∖ F' for every earlier frontier F'.
  bool successor_law = true;
};

struct SubcoverResult {
  std::vector<int> indices;  // ascending subbase indices, a subset of the cover
  std::vector<CoverState> trace;  // trace[0] is the initial state
  int rounds() const { return static_cast<int>(trace.size()) - 1; }
  bool all_checks_hold() const;
};

/// Cover members (subbase indices at the top level) whose union contains ↓x:
/// the first member containing the root, plus one first member per further
/// point of the chain ↓x. Throws NotACover.
std::vector<int> cover_downset(const StagedTopology& st, const std::vector<int>& cover, Element x);

/// Runs the frontier recursion until the frontier is empty or repeats an
/// earlier point, and returns the accumulated family. Throws NotACover,
/// NonTermination (after ĥ(X) + |X| rounds) or InternalInvariant if the
/// result fails to cover.
SubcoverResult extract_subcover(const StagedTopology& st, const std::vector<int>& cover);

}  // namespace esakia
