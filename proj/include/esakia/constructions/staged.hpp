#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"
#include "esakia/topology.hpp"

namespace esakia {

/// Which generating family first produced a subbase set at level α+1:
/// {x} for x ∈ S_{α+1}, ↓x for x ∈ P_α, or a shifted open
/// (V ∪ ↑_{α+1}(V ∩ X_α)) ∖ ↓Z. Level 0 holds only the root singleton.
enum class SubbaseFamily { Root, Singleton, Downset, Shifted };

/// V open at the previous level, Z ⊆ P_α ∪ S_{α+1}.
struct ShiftedForm {
  PointSet v;
  PointSet z;
};

struct SubbaseEntry {
  PointSet set;
  SubbaseFamily family = SubbaseFamily::Shifted;
  /// First shifted representation in enumeration order (V in canonical order
  /// of the previous level's opens, then Z by increasing bitmask over the
  /// ascending members of P_α ∪ S_{α+1}). Absent if the set has none.
  std::optional<ShiftedForm> shifted;
};

struct StagedLevel {
  int alpha = 0;
  PointSet slice;    // X_α
  PointSet at_most;  // X_{≤α}
  PointSet p_set;    // P_α: members of X_α with something above them in X_{α+1}
  PointSet s_set;    // S_α = X_α ∖ {x⁺ : x ∈ P_{α-1}}; empty at level 0
  /// Canonically sorted, distinct.
  std::vector<SubbaseEntry> subbase;
  FiniteTopology topology;  // τ_α on X_{≤α}
  /// All opens of τ_α in canonical order when `opens_complete`.
  std::vector<PointSet> opens;
  bool opens_complete = true;

  std::unordered_map<PointSet, int, PointSetHash> index;  // set -> subbase position
};

/// Per-element override of the x⁺ choice; -1 (or a short vector) keeps the
/// default smallest-index choice.
using PlusChoice = std::vector<Element>;

class StagedTopology {
 public:
  /// Above this many opens at a level, the next level's shifted family draws
  /// V only from base sets and their pairwise unions.
  static constexpr std::size_t kMaxOpens = 16384;
  /// Largest P_α ∪ S_{α+1} whose subsets are enumerated.
  static constexpr int kMaxShiftDomain = 16;

  const FinitePoset& tree() const { return tree_; }
  const HeightProfile& heights() const { return heights_; }
  int height() const { return heights_.max_height(); }
  /// Throws InvalidElement outside 0..height().
  const StagedLevel& level(int alpha) const;
  const std::vector<StagedLevel>& levels() const { return levels_; }
  const StagedLevel& top() const { return levels_.back(); }
  const FiniteTopology& final_topology() const { return levels_.back().topology; }

  /// x⁺ for x ∈ P_α, else -1.
  Element plus(Element x) const { return plus_[static_cast<std::size_t>(x)]; }
  const std::vector<Element>& plus_map() const { return plus_; }
  /// Whether some level enumerated V from the restricted range.
  bool restricted() const { return restricted_; }

  /// Position of `s` in 𝒮_α, or -1.
  int subbase_index(int alpha, const PointSet& s) const;

 private:
  friend StagedTopology staged_topology(const FinitePoset& tree, const PlusChoice& choice);

  FinitePoset tree_;
  HeightProfile heights_;
  std::vector<StagedLevel> levels_;
  std::vector<Element> plus_;
  bool restricted_ = false;
};

/// Builds levels 0..ĥ(X). Throws NotATree, InvalidElement (inadmissible
/// choice), EnumerationLimit (shift domain too large).
StagedTopology staged_topology(const FinitePoset& tree, const PlusChoice& choice = {});

/// Every admissible choice map (the cartesian product of X_{α+1} ∩ ↑x over
/// all x ∈ P_α). Throws EnumerationLimit beyond `limit` maps.
std::vector<PlusChoice> all_plus_choices(const FinitePoset& tree, std::size_t limit = 4096);

/// For U open at level β < α: U ∪ ↑_α(U ∩ X_β) belongs to 𝒮_α.
/// Throws NotOpenAtLevel if U is not open in τ_β.
bool shifted_open_in_subbase(const StagedTopology& st, int beta, int alpha, const PointSet& u);

/// f_x(α) for ĥ(x) ≤ α ≤ ĥ(X): start at x and step to x⁺ whenever the current
/// point lies in P_α.
struct Climb {
  Element origin = 0;
  int start = 0;  // ĥ(origin)
  std::vector<Element> values;
  Element at(int alpha) const { return values.at(static_cast<std::size_t>(alpha - start)); }
  int end() const { return start + static_cast<int>(values.size()) - 1; }
};

Climb climb(const StagedTopology& st, Element x);

struct ClimbLaws {
  bool order_preserving = true;  // α ≤ β implies f_x(α) ≤ f_x(β)
  bool maximal = true;           // f_x(α) ∈ max X_{≤α}
  bool avoids_singletons = true; // f_x(α+1) ∉ S_{α+1}
  bool holds() const { return order_preserving && maximal && avoids_singletons; }
};

ClimbLaws check_climb(const StagedTopology& st, const Climb& c);

}  // namespace esakia

namespace esakia {

/// Finite heights are naturals, so every level is zero or a successor. The
/// limit branches of the constructions route here and raise
/// LimitHeightUnsupported instead of being silently dropped.
enum class OrdinalKind { Zero, Successor, Limit };
inline OrdinalKind ordinal_kind(int alpha) {
  return alpha == 0 ? OrdinalKind::Zero : OrdinalKind::Successor;
}
[[noreturn]] void limit_unsupported(const char* where);

}  // namespace esakia
