#include "esakia/constructions/root_subbase.hpp"

#include "esakia/error.hpp"

namespace esakia {

RootSubbase root_subbase(const FinitePoset& p) {
  if (!is_root_system(p)) {
    throw Error(ErrorCode::NotARootSystem, "order dual is not a forest");
  }
  const std::vector<PointSet> parts = components(p);
  std::vector<PointSet> downs;
  std::vector<PointSet> complements;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).empty()) continue;
    PointSet part;
    for (const PointSet& c : parts)
      if (c.contains(x)) part = c;
    downs.push_back(p.down(x));
    complements.push_back(part - p.down(x));
  }
  RootSubbase out{p, std::move(downs)};
  out.sets.insert(out.sets.end(), complements.begin(), complements.end());
  if (parts.size() > 1) out.sets.insert(out.sets.end(), parts.begin(), parts.end());
  return out;
}

RootTopologyReport root_topology_check(const FinitePoset& p) {
  RootTopologyReport report;
  report.subbase = root_subbase(p);
  report.topology = generate_base(report.subbase.sets, p.size());
  report.esakia = esakia_check(p, report.topology);
  report.discrete = is_discrete(report.topology);
  return report;
}

}  // namespace esakia
