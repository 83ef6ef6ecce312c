#include "esakia/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "esakia/error.hpp"
#include "esakia/order_open.hpp"

namespace esakia {

FiniteTopology generate_base(const std::vector<PointSet>& subbase, int carrier_size) {
  if (carrier_size < 0 || carrier_size > PointSet::kCapacity) {
    throw Error(ErrorCode::SizeCap, "carrier size " + std::to_string(carrier_size));
  }
  return generate_base(subbase, PointSet::full(carrier_size));
}

FiniteTopology generate_base(const std::vector<PointSet>& subbase, const PointSet& carrier) {
  const PointSet& full = carrier;
  for (std::size_t i = 0; i < subbase.size(); ++i) {
    if (!subbase[i].subset_of(full)) {
      throw Error(ErrorCode::InvalidElement,
                  "subbase member " + std::to_string(i) + " leaves the carrier");
    }
  }

  std::vector<PointSet> generators = subbase;
  normalize_family(generators);

  std::unordered_set<PointSet, PointSetHash> seen{full};
  std::vector<PointSet> base{full};
  std::vector<PointSet> worklist{full};
  while (!worklist.empty()) {
    const PointSet b = worklist.back();
    worklist.pop_back();
    for (const PointSet& g : generators) {
      const PointSet next = b & g;
      if (seen.insert(next).second) {
        if (base.size() >= FiniteTopology::kMaxBase) {
          throw Error(ErrorCode::OversizeSubbase,
                      "intersection closure exceeds " + std::to_string(FiniteTopology::kMaxBase) +
                          " sets (subbase has " + std::to_string(subbase.size()) + ")");
        }
        base.push_back(next);
        worklist.push_back(next);
      }
    }
  }
  sort_canonical(base);

  FiniteTopology t;
  t.carrier_ = carrier;
  t.subbase_ = subbase;
  t.base_ = std::move(base);
  t.nbhd_.assign(static_cast<std::size_t>(carrier.max() + 1), full);
  for (const PointSet& g : generators) {
    g.for_each([&](Element x) { t.nbhd_[static_cast<std::size_t>(x)] &= g; });
  }
  return t;
}

bool is_open(const FiniteTopology& t, const PointSet& s) {
  if (!s.subset_of(t.carrier())) return false;
  bool open = true;
  s.for_each([&](Element x) {
    if (open && !t.neighbourhood(x).subset_of(s)) open = false;
  });
  return open;
}

bool is_clopen(const FiniteTopology& t, const PointSet& s) {
  return is_open(t, s) && is_open(t, t.carrier() - s);
}

bool is_discrete(const FiniteTopology& t) {
  bool discrete = true;
  t.carrier().for_each([&](Element x) {
    if (t.neighbourhood(x) != PointSet::singleton(x)) discrete = false;
  });
  return discrete;
}

std::vector<std::size_t> subbase_subcover(const FiniteTopology& t,
                                          const std::vector<std::size_t>& cover) {
  for (std::size_t i : cover) {
    if (i >= t.subbase().size()) {
      throw Error(ErrorCode::InvalidElement, "subbase index " + std::to_string(i));
    }
  }
  return greedy_cover_indices(t.subbase(), cover, t.carrier());
}

std::vector<PointSet> clopen_upsets(const FinitePoset& p, const FiniteTopology& t) {
  std::vector<PointSet> out;
  for (const PointSet& u : all_upsets(p))
    if (is_clopen(t, u)) out.push_back(u);
  return out;
}

PriestleyReport priestley_check(const FinitePoset& p, const FiniteTopology& t) {
  if (p.carrier() != t.carrier()) {
    throw Error(ErrorCode::InvalidElement, "poset and topology carriers differ");
  }
  const std::vector<PointSet> candidates = clopen_upsets(p, t);
  PriestleyReport report;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) continue;
      SeparatingSet entry{x, y, std::nullopt};
      for (const PointSet& u : candidates) {
        if (u.contains(x) && !u.contains(y)) {
          entry.upset = u;
          break;
        }
      }
      if (!entry.upset && report.holds) {
        report.holds = false;
        report.failing_pair = {x, y};
      }
      report.table.push_back(entry);
    }
  }
  return report;
}

EsakiaReport esakia_check(const FinitePoset& p, const FiniteTopology& t) {
  EsakiaReport report;
  report.priestley = priestley_check(p, t).holds;
  report.downsets_open = true;
  for (const PointSet& b : t.base()) {
    if (!is_open(t, downset(p, b))) {
      report.downsets_open = false;
      report.failing_base = b;
      break;
    }
  }
  return report;
}

}  // namespace esakia
