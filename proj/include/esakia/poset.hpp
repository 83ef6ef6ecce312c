#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esakia/point_set.hpp"

namespace esakia {

struct Cover {
  Element lower;
  Element upper;
  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Finite poset given by its Hasse diagram. The order is the
/// reflexive-transitive closure of the covers and is cached as principal
/// up- and downsets. Immutable once built.
class FinitePoset {
 public:
  static constexpr int kMaxElements = PointSet::kCapacity;

  FinitePoset() = default;

  /// Validates acyclicity and rejects any cover implied by the others.
  /// Throws CycleError, NonHasseEdge, InvalidElement or SizeCap.
  static FinitePoset from_covers(int n, std::vector<Cover> covers,
                                 std::vector<std::string> labels = {});

  /// Builds from the principal upsets ↑x of an order relation; the covers are
  /// derived by transitive reduction. Throws NotAPartialOrder.
  static FinitePoset from_upsets(std::vector<PointSet> principal_upsets,
                                 std::vector<std::string> labels = {});

  int size() const { return n_; }
  PointSet carrier() const { return PointSet::full(n_); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(static_cast<std::size_t>(x)); }
  /// Index of the element carrying `label`, if any.
  std::optional<Element> find_label(const std::string& label) const;

  /// Sorted by (lower, upper).
  const std::vector<Cover>& covers() const { return covers_; }

  bool leq(Element x, Element y) const { return up_[idx(x)].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Principal upset ↑x and downset ↓x.
  const PointSet& up(Element x) const { return up_[idx(x)]; }
  const PointSet& down(Element x) const { return down_[idx(x)]; }
  const PointSet& upper_covers(Element x) const { return upper_covers_[idx(x)]; }
  const PointSet& lower_covers(Element x) const { return lower_covers_[idx(x)]; }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_ && a.labels_ == b.labels_;
  }

 private:
  static std::size_t idx(Element x) { return static_cast<std::size_t>(x); }
  void derive_cover_sets();

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::vector<PointSet> upper_covers_;
  std::vector<PointSet> lower_covers_;
};

// ---------------------------------------------------------------------------
// Order-theoretic primitives

PointSet upset(const FinitePoset& p, const PointSet& s);
PointSet downset(const FinitePoset& p, const PointSet& s);
bool is_upset(const FinitePoset& p, const PointSet& s);
bool is_downset(const FinitePoset& p, const PointSet& s);

bool immediate_predecessor(const FinitePoset& p, Element x, Element y);

bool is_chain(const FinitePoset& p, const PointSet& s);
bool is_antichain(const FinitePoset& p, const PointSet& s);
PointSet maximal_elements(const FinitePoset& p, const PointSet& s);
PointSet minimal_elements(const FinitePoset& p, const PointSet& s);

/// Maximum of a nonempty chain (its supremum in a finite poset).
/// Throws EmptyChain or NotAChain.
Element chain_sup(const FinitePoset& p, const PointSet& chain);
Element chain_inf(const FinitePoset& p, const PointSet& chain);

struct GapWitness {
  Element x, y;              // x < y
  Element x_prime, y_prime;  // x <= x' ≺ y' <= y
};

struct GapsReport {
  bool holds = true;
  /// One entry per comparable pair x < y, ordered by (x, y); the witness is the
  /// lexicographically smallest admissible (x', y').
  std::vector<GapWitness> witnesses;
};

GapsReport has_enough_gaps(const FinitePoset& p);

// ---------------------------------------------------------------------------
// Structural recognizers

/// Connected components of the comparability graph, each as a point set,
/// ordered by smallest member.
std::vector<PointSet> components(const FinitePoset& p);

bool is_tree(const FinitePoset& p);
bool is_forest(const FinitePoset& p);
bool is_root_system(const FinitePoset& p);

struct WellOrderedVerdict {
  bool value = true;
  std::string note;
};
/// Finite posets have no infinite descending chains, so this is always true.
WellOrderedVerdict is_well_ordered(const FinitePoset& p);

/// ĥ(x) = |↓x| - 1 on a forest.
class HeightProfile {
 public:
  HeightProfile() = default;
  HeightProfile(std::vector<int> height, int n);

  int operator()(Element x) const { return height_.at(static_cast<std::size_t>(x)); }
  int max_height() const { return max_height_; }
  const std::vector<int>& heights() const { return height_; }

  /// X_α, X_{<=α}, X_{<α}, X_{>α}.
  PointSet slice(int alpha) const;
  PointSet at_most(int alpha) const;
  PointSet below(int alpha) const;
  PointSet above(int alpha) const;

 private:
  std::vector<int> height_;
  int max_height_ = 0;
};

/// Throws NotATree unless p is a forest.
HeightProfile heights(const FinitePoset& p);

/// ↑_α S := X_{<=α} ∩ ↑S.
PointSet bounded_upset(const FinitePoset& p, const HeightProfile& h, const PointSet& s,
                       int alpha);

// ---------------------------------------------------------------------------
// Constructions on posets

FinitePoset order_dual(const FinitePoset& p);
/// Q's carrier is shifted to follow P's.
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);
/// Induced subposet on `s`, relabelled to 0..|s|-1 in ascending index order.
FinitePoset induced_subposet(const FinitePoset& p, const PointSet& s);

/// All upsets, each generated from its antichain of minimal elements, in
/// canonical order. Throws EnumerationLimit past `limit` sets.
std::vector<PointSet> all_upsets(const FinitePoset& p, std::size_t limit = std::size_t{1} << 20);
std::vector<PointSet> all_downsets(const FinitePoset& p,
                                   std::size_t limit = std::size_t{1} << 20);

/// Named small posets used across tests and docs.
namespace shapes {
FinitePoset chain(int n);
FinitePoset antichain(int n);
/// b < t1, b < t2.
FinitePoset vee();
/// a < t, b < t.
FinitePoset wedge();
}  // namespace shapes

}  // namespace esakia
