#pragma once

#include <vector>

#include "esakia/point_set.hpp"
#include "esakia/poset.hpp"
#include "esakia/topology.hpp"

namespace esakia {

struct RootSubbase {
  FinitePoset carrier;
  /// ↓x for every x with an upper cover, then the complements of those
  /// downsets within x's component, then (with two or more components) each
  /// component's carrier.
  std::vector<PointSet> sets;
};

/// Throws NotARootSystem.
RootSubbase root_subbase(const FinitePoset& p);

struct RootTopologyReport {
  RootSubbase subbase;
  FiniteTopology topology;
  EsakiaReport esakia;
  bool discrete = false;
  bool holds() const { return esakia.holds() && discrete; }
};

/// Topology generated by the root-system subbase together with its Priestley,
/// Esakia and discreteness verdicts.
RootTopologyReport root_topology_check(const FinitePoset& p);

}  // namespace esakia
