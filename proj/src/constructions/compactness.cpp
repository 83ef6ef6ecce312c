#include "esakia/constructions/compactness.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "esakia/error.hpp"

namespace esakia {

bool SubcoverResult::all_checks_hold() const {
  return std::all_of(trace.begin(), trace.end(), [](const CoverState& s) {
    return s.antichain && s.lower_part_covered && s.successor_law;
  });
}

namespace {

const PointSet& top_set(const StagedTopology& st, int index) {
  const StagedLevel& top = st.top();
  if (index < 0 || index >= static_cast<int>(top.subbase.size())) {
    throw Error(ErrorCode::InvalidElement, "no top-level subbase set " + std::to_string(index));
  }
  return top.subbase[static_cast<std::size_t>(index)].set;
}

void require_cover(const StagedTopology& st, const std::vector<int>& cover) {
  PointSet reach;
  for (int i : cover) reach |= top_set(st, i);
  if (!st.tree().carrier().subset_of(reach)) {
    throw Error(ErrorCode::NotACover, "cover misses " + (st.tree().carrier() - reach).to_string());
  }
}

int first_containing(const StagedTopology& st, const std::vector<int>& cover, Element x) {
  for (int i : cover)
    if (top_set(st, i).contains(x)) return i;
  throw Error(ErrorCode::NotACover, "no cover member contains " + std::to_string(x));
}

void add_sorted(std::vector<int>& family, int i) {
  auto it = std::lower_bound(family.begin(), family.end(), i);
  if (it == family.end() || *it != i) family.insert(it, i);
}

}  // namespace

std::vector<int> cover_downset(const StagedTopology& st, const std::vector<int>& cover, Element x) {
  require_cover(st, cover);
  std::vector<int> out;
  // Induction along the chain ↓x from the root upwards.
  std::vector<Element> chain = st.tree().down(x).members();
  std::sort(chain.begin(), chain.end(),
            [&](Element a, Element b) { return st.heights()(a) < st.heights()(b); });
  for (Element y : chain) add_sorted(out, first_containing(st, cover, y));
  return out;
}

SubcoverResult extract_subcover(const StagedTopology& st, const std::vector<int>& cover) {
  require_cover(st, cover);
  const FinitePoset& t = st.tree();
  const int height = st.height();
  const PointSet carrier = t.carrier();

  MainLemmaSolver solver(st);
  std::map<Element, PointData> data;
  auto point_data = [&](Element x) -> const PointData& {
    auto it = data.find(x);
    if (it != data.end()) return it->second;
    PointData d;
    d.x = x;
    d.u = first_containing(st, cover, climb(st, x).at(height));
    d.witness = solver.witness(x, height, top_set(st, d.u));
    d.down_cover = cover_downset(st, cover, x);
    return data.emplace(x, std::move(d)).first->second;
  };

  auto union_of_family = [&](const std::vector<int>& family) {
    PointSet s;
    for (int i : family) s |= top_set(st, i);
    return s;
  };

  SubcoverResult result;
  CoverState initial;
  initial.frontier = PointSet::singleton(minimal_elements(t, carrier).min());
  initial.lower_part_covered = (carrier - upset(t, initial.frontier)).subset_of(PointSet{});
  result.trace.push_back(initial);

  PointSet seen = initial.frontier;  // union of all frontiers so far
  const int guard = height + t.size();
  for (;;) {
    const CoverState& cur = result.trace.back();
    if (cur.round >= guard) {
      throw Error(ErrorCode::NonTermination, "frontier recursion exceeded " + std::to_string(guard) + " rounds");
    }
    CoverState next;
    next.round = cur.round + 1;
    next.family = cur.family;
    PointSet candidates;  // A
    cur.frontier.for_each([&](Element y) {
      const PointData& d = point_data(y);
      next.points.push_back(d);
      add_sorted(next.family, d.u);
      d.witness.z.for_each([&](Element z) {
        for (int i : point_data(z).down_cover) add_sorted(next.family, i);
      });
      (d.witness.y & t.up(y)).for_each([&](Element z) {
        // Skip z lying strictly below a point of an earlier frontier.
        if (((t.up(z) - PointSet::singleton(z)) & seen).empty()) candidates.insert(z);
      });
    });
    next.frontier = minimal_elements(t, candidates);

    next.antichain = is_antichain(t, next.frontier);
    next.lower_part_covered = (carrier - upset(t, next.frontier)).subset_of(union_of_family(next.family));
    for (const CoverState& earlier : result.trace) {
      const PointSet allowed = upset(t, earlier.frontier) - earlier.frontier;
      if (!next.frontier.subset_of(allowed)) next.successor_law = false;
    }
    const bool stop = next.frontier.empty() || next.frontier.subset_of(seen);
    seen |= next.frontier;
    result.trace.push_back(std::move(next));
    if (stop) break;
  }

  result.indices = result.trace.back().family;
  if (!carrier.subset_of(union_of_family(result.indices))) {
    throw Error(ErrorCode::InternalInvariant, "extracted family does not cover the carrier");
  }
  return result;
}

}  // namespace esakia
