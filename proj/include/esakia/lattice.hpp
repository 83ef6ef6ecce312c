#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"

namespace esakia {

class FiniteTopology;

/// n×n operation table, row-major.
using Table = std::vector<std::vector<int>>;

/// Bounded distributive lattice given by validated meet and join tables. The
/// order is read off the meet: a ≤ b iff a ∧ b = a.
class FiniteLattice {
 public:
  static constexpr int kMaxElements = PointSet::kCapacity;

  FiniteLattice() = default;

  int size() const { return n_; }
  int meet(int a, int b) const { return meet_[at(a, b)]; }
  int join(int a, int b) const { return join_[at(a, b)]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }

  Table meet_table() const;
  Table join_table() const;

 private:
  friend FiniteLattice validate_lattice(const Table&, const Table&, std::vector<std::string>);
  std::size_t at(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::string> labels_;
};

struct LatticeViolation {
  std::string axiom;  // e.g. "associativity(meet)", "distributivity"
  int a = -1, b = -1, c = -1;
  bool distributivity() const { return axiom == "distributivity"; }
  std::string describe() const;
};

/// First failing axiom in a fixed order: shape, range, idempotence,
/// commutativity, associativity, absorption, bounds, distributivity.
std::optional<LatticeViolation> find_lattice_violation(const Table& meet, const Table& join);

/// Throws NotALattice or NotDistributive (with the witness in the message),
/// or SizeCap beyond kMaxElements.
FiniteLattice validate_lattice(const Table& meet, const Table& join,
                               std::vector<std::string> labels = {});

/// Lattice paired with its relative pseudocomplement b → c = max{a : a ∧ b ≤ c}.
class HeytingAlgebra {
 public:
  HeytingAlgebra() = default;
  HeytingAlgebra(FiniteLattice lattice, std::vector<int> implies);

  const FiniteLattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  int implies(int a, int b) const {
    return implies_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) +
                    static_cast<std::size_t>(b)];
  }
  Table implies_table() const;

 private:
  FiniteLattice lattice_;
  std::vector<int> implies_;
};

/// Throws NoMaximum if some {a : a ∧ b ≤ c} lacks a maximum.
HeytingAlgebra heyting_complete(const FiniteLattice& l);

/// First triple breaking a ∧ b ≤ c ⟺ a ≤ b → c, if any.
std::optional<std::array<int, 3>> residuation_violation(const HeytingAlgebra& h);

struct GodelVerdict {
  bool holds = true;
  /// First pair (x, y) in index order with (x→y) ∨ (y→x) ≠ 1.
  std::optional<std::pair<int, int>> witness;
};
GodelVerdict is_godel(const HeytingAlgebra& h);

/// Whether F satisfies every clause of the prime-filter definition.
bool is_prime_filter(const FiniteLattice& l, const PointSet& f);

/// All prime filters in canonical order. In a finite lattice every filter is
/// principal, so the principal filters ↑a (a ≠ 0) are checked directly.
std::vector<PointSet> prime_filters(const FiniteLattice& l);

/// Prime filters ordered by inclusion; element i is prime_filters(l)[i].
FinitePoset spectrum(const FiniteLattice& l);

/// {i : a ∈ filters[i]}.
PointSet gamma(const std::vector<PointSet>& filters, int a);
PointSet gamma(const FiniteLattice& l, int a);

/// A Heyting algebra whose elements are subsets of a poset, with ∩, ∪ and
/// U → V = {x : U ∩ ↑x ⊆ V}. Element i is sets[i].
struct SetAlgebra {
  HeytingAlgebra algebra;
  std::vector<PointSet> sets;
  /// Index of `s` in sets, or -1.
  int index_of(const PointSet& s) const;
};

/// All upsets of P (the dual algebra under the discrete topology).
SetAlgebra upset_algebra(const FinitePoset& p);
/// Clopen upsets of P under T. The implication formula is only a Heyting
/// implication when (P, T) is an Esakia space; validation catches the rest.
SetAlgebra clopen_upset_algebra(const FinitePoset& p, const FiniteTopology& t);

/// "{a,b}" using the poset's labels.
std::string format_set(const FinitePoset& p, const PointSet& s);

}  // namespace esakia
