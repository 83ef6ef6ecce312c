#pragma once

#include <cstdint>
#include <vector>

#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// The least family of subsets containing every {x}ᶜ and closed under the two
/// blur operators U ↦ (↑Uᶜ)ᶜ and U ↦ (↓Uᶜ)ᶜ, finite intersections and
/// arbitrary unions. Materialized over the powerset, so n <= 16.
class OrderOpenFamily {
 public:
  static constexpr int kMaxElements = 16;

  OrderOpenFamily() = default;
  OrderOpenFamily(int n, std::vector<bool> member);

  int carrier_size() const { return n_; }
  bool contains(const PointSet& s) const;
  /// Canonically sorted.
  std::vector<PointSet> sets() const;
  std::size_t count() const;

 private:
  int n_ = 0;
  std::vector<bool> member_;  // indexed by subset mask
};

/// Fixpoint computation. Throws SizeCap when n > 16.
OrderOpenFamily order_open_family(const FinitePoset& p);

/// Greedy finite subcover: descending size, then ascending index, followed by
/// a pruning pass that drops members made redundant by later picks.
/// Throws NotOrderOpen (detail names the index) or NotACover.
std::vector<PointSet> order_subcover(const FinitePoset& p, const std::vector<PointSet>& cover);
std::vector<PointSet> order_subcover(const OrderOpenFamily& family,
                                     const std::vector<PointSet>& cover);

/// (↑Y ∩ ↓Z)ᶜ is order-open. Always expected to hold on finite posets.
bool updown_complement_is_order_open(const FinitePoset& p, const OrderOpenFamily& family,
                                     const PointSet& y, const PointSet& z);
bool updown_complement_is_order_open(const FinitePoset& p, const PointSet& y, const PointSet& z);

/// Shared by the order and topological subcover routines: indices into `sets`
/// chosen greedily (largest first, ties by index) and then pruned. Returns
/// ascending indices. Throws NotACover when the candidates miss part of `target`.
std::vector<std::size_t> greedy_cover_indices(const std::vector<PointSet>& sets,
                                              const std::vector<std::size_t>& candidates,
                                              const PointSet& target);

}  // namespace esakia
