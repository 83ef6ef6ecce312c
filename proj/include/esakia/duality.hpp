#pragma once

#include <optional>
#include <vector>

#include "esakia/lattice.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// Mutually inverse order isomorphisms; forward[x] is the image of x.
struct PosetIso {
  std::vector<Element> forward;
  std::vector<Element> backward;
};

struct LatticeIso {
  std::vector<int> forward;
  std::vector<int> backward;
};

/// Backtracking search pruned by per-element invariants (height, cover
/// degrees, |↑x|, |↓x|). Absence is certified by exhausting the search.
std::optional<PosetIso> poset_isomorphism(const FinitePoset& p, const FinitePoset& q);

/// Order isomorphism of the lattices, pruned by (|↑a|, |↓a|). Any order
/// isomorphism of lattices preserves meets, joins and bounds.
std::optional<LatticeIso> lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

/// Whether `iso` is a bijection preserving and reflecting the order.
bool is_poset_iso(const FinitePoset& p, const FinitePoset& q, const PosetIso& iso);
/// Whether `iso` preserves meet, join and both bounds.
bool is_lattice_iso(const FiniteLattice& a, const FiniteLattice& b, const LatticeIso& iso);

struct PosetDoubleDual {
  SetAlgebra algebra;             // upsets of P
  std::vector<PointSet> filters;  // prime filters of the algebra
  FinitePoset spectrum;
  PosetIso iso;                   // x ↦ {U : x ∈ U}, as an index into filters
};

/// Checks that x ↦ {U : x ∈ U} is an isomorphism from P onto the spectrum
/// of its upset algebra. Throws DualityFailure otherwise.
PosetDoubleDual double_dual_poset(const FinitePoset& p);

struct LatticeDoubleDual {
  std::vector<PointSet> filters;
  FinitePoset spectrum;
  SetAlgebra upsets;  // upsets of the spectrum
  LatticeIso iso;     // a ↦ γ(a), as an index into upsets.sets
};

/// Checks that γ is an isomorphism from A onto the upsets of its spectrum.
/// Throws DualityFailure otherwise.
LatticeDoubleDual double_dual_lattice(const FiniteLattice& a);

/// Whether the upset algebra of P satisfies (x→y) ∨ (y→x) = 1, which must
/// coincide with P being a root system. Throws HornMismatch if they differ.
bool horn_verify(const FinitePoset& p);

}  // namespace esakia
