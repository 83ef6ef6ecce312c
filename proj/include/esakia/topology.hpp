#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// Topology presented by a subbase on a carrier, usually {0..n-1} but any
/// subset of indices is allowed. The base (all finite intersections, the empty
/// one being the carrier) and the minimal open neighbourhood of each point are
/// derived once at construction.
class FiniteTopology {
 public:
  /// Upper bound on distinct base sets before generation gives up.
  static constexpr std::size_t kMaxBase = 65536;

  FiniteTopology() = default;

  int carrier_size() const { return carrier_.size(); }
  const PointSet& carrier() const { return carrier_; }
  const std::vector<PointSet>& subbase() const { return subbase_; }
  /// Canonically sorted, duplicate free.
  const std::vector<PointSet>& base() const { return base_; }
  /// Intersection of all open sets containing x.
  const PointSet& neighbourhood(Element x) const { return nbhd_[static_cast<std::size_t>(x)]; }

 private:
  friend FiniteTopology generate_base(const std::vector<PointSet>& subbase, const PointSet& carrier);

  PointSet carrier_;
  std::vector<PointSet> subbase_;
  std::vector<PointSet> base_;
  std::vector<PointSet> nbhd_;
};

/// Throws InvalidElement if a member leaves the carrier, OversizeSubbase if the
/// intersection closure exceeds kMaxBase sets.
FiniteTopology generate_base(const std::vector<PointSet>& subbase, int carrier_size);
FiniteTopology generate_base(const std::vector<PointSet>& subbase, const PointSet& carrier);

/// S lies in the carrier and every point of S has a base set around it inside S.
bool is_open(const FiniteTopology& t, const PointSet& s);
/// Open with open complement relative to the carrier.
bool is_clopen(const FiniteTopology& t, const PointSet& s);
bool is_discrete(const FiniteTopology& t);

/// Greedy subcover of the indexed subbase members (largest first, ties by
/// index, then pruned). Returns ascending indices. Throws NotACover.
std::vector<std::size_t> subbase_subcover(const FiniteTopology& t,
                                          const std::vector<std::size_t>& cover);

/// Clopen upsets in canonical order.
std::vector<PointSet> clopen_upsets(const FinitePoset& p, const FiniteTopology& t);

struct SeparatingSet {
  Element x, y;  // x ≰ y
  std::optional<PointSet> upset;  // clopen upset with x inside and y outside
};

struct PriestleyReport {
  bool holds = true;
  /// One entry per pair x ≰ y, ordered by (x, y); the set is the first
  /// separating clopen upset in canonical order.
  std::vector<SeparatingSet> table;
  /// First pair without a separating set.
  std::optional<std::pair<Element, Element>> failing_pair;
};

PriestleyReport priestley_check(const FinitePoset& p, const FiniteTopology& t);

struct EsakiaReport {
  bool priestley = false;
  bool downsets_open = false;
  /// First base set whose downset is not open.
  std::optional<PointSet> failing_base;
  bool holds() const { return priestley && downsets_open; }
};

/// Priestley separation plus openness of ↓B for every base set B. Base sets
/// suffice because ↓ distributes over unions.
EsakiaReport esakia_check(const FinitePoset& p, const FiniteTopology& t);

}  // namespace esakia
