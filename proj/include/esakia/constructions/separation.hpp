#pragma once

#include <optional>

#include "esakia/constructions/staged.hpp"

namespace esakia {

/// A clopen upset of the top level containing x and missing y, built level by
/// level: lift a separator of the predecessors when they are still separated,
/// otherwise cut away ↓y or isolate x. Each intermediate set is checked to be
/// a clopen upset of its level. Throws NotComparablePrecondition if x ≤ y.
PointSet separation_witness(const StagedTopology& st, Element x, Element y);

/// Same recursion stopped at level α (both points must lie in X_{≤α}).
PointSet separation_at_level(const StagedTopology& st, int alpha, Element x, Element y);

struct DownsetOpenReport {
  /// ↓B is open for every base set B of the top level.
  bool base_downsets_open = true;
  std::optional<PointSet> failing_base;
  /// ↓x is itself a top-level subbase set for every non-maximal x.
  bool principal_downsets_in_subbase = true;
  std::optional<Element> failing_point;
  bool holds() const { return base_downsets_open && principal_downsets_in_subbase; }
};

DownsetOpenReport downset_open_check(const StagedTopology& st);

}  // namespace esakia
