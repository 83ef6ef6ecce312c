#include "esakia/constructions/separation.hpp"

#include <string>

#include "esakia/error.hpp"

namespace esakia {

namespace {

bool clopen_upset_at(const StagedTopology& st, int alpha, const PointSet& u) {
  const StagedLevel& level = st.level(alpha);
  return is_clopen(level.topology, u) && (upset(st.tree(), u) & level.at_most) == u;
}

PointSet separate(const StagedTopology& st, int alpha, Element x, Element y) {
  const FinitePoset& t = st.tree();
  const HeightProfile& h = st.heights();
  PointSet u;
  switch (ordinal_kind(alpha)) {
    case OrdinalKind::Zero:
      throw Error(ErrorCode::InternalInvariant, "level 0 has a single point, nothing to separate");
    case OrdinalKind::Limit:
      limit_unsupported("separation");
    case OrdinalKind::Successor: {
      const int prev = alpha - 1;
      const StagedLevel& lp = st.level(prev);
      const StagedLevel& la = st.level(alpha);
      auto bar = [&](Element z) { return h(z) == alpha ? t.lower_covers(z).min() : z; };
      const Element xb = bar(x);
      const Element yb = bar(y);
      if (!t.leq(xb, yb)) {
        const PointSet v = separate(st, prev, xb, yb);
        u = v | bounded_upset(t, h, v & lp.slice, alpha);
      } else if (lp.p_set.contains(y) || la.s_set.contains(y)) {
        u = la.at_most - t.down(y);
      } else {
        u = PointSet::singleton(x);
      }
      break;
    }
  }
  if (!u.contains(x) || u.contains(y) || !clopen_upset_at(st, alpha, u)) {
    throw Error(ErrorCode::InternalInvariant, "separator " + u.to_string() + " of (" + std::to_string(x) +
                                                  "," + std::to_string(y) + ") at level " +
                                                  std::to_string(alpha) + " is not a clopen upset");
  }
  return u;
}

}  // namespace

PointSet separation_at_level(const StagedTopology& st, int alpha, Element x, Element y) {
  const StagedLevel& level = st.level(alpha);
  if (!level.at_most.contains(x) || !level.at_most.contains(y)) {
    throw Error(ErrorCode::InvalidElement, "points must lie at or below level " + std::to_string(alpha));
  }
  if (st.tree().leq(x, y)) {
    throw Error(ErrorCode::NotComparablePrecondition,
                std::to_string(x) + " <= " + std::to_string(y) + ", nothing to separate");
  }
  return separate(st, alpha, x, y);
}

PointSet separation_witness(const StagedTopology& st, Element x, Element y) {
  const int n = st.tree().size();
  if (x < 0 || x >= n || y < 0 || y >= n) throw Error(ErrorCode::InvalidElement, "point outside the tree");
  return separation_at_level(st, st.height(), x, y);
}

DownsetOpenReport downset_open_check(const StagedTopology& st) {
  DownsetOpenReport report;
  const FinitePoset& t = st.tree();
  const FiniteTopology& top = st.final_topology();
  for (const PointSet& b : top.base()) {
    if (!is_open(top, downset(t, b))) {
      report.base_downsets_open = false;
      report.failing_base = b;
      break;
    }
  }
  for (Element x = 0; x < t.size(); ++x) {
    if (t.upper_covers(x).empty()) continue;
    if (st.subbase_index(st.height(), t.down(x)) < 0) {
      report.principal_downsets_in_subbase = false;
      report.failing_point = x;
      break;
    }
  }
  return report;
}

}  // namespace esakia
