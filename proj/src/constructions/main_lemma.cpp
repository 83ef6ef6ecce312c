#include "esakia/constructions/main_lemma.hpp"

#include <string>

#include "esakia/error.hpp"

namespace esakia {

bool witness_valid(const StagedTopology& st, Element x, int alpha, const PointSet& u,
                   const MainLemmaWitness& w) {
  const FinitePoset& t = st.tree();
  const HeightProfile& h = st.heights();
  const PointSet up_v = bounded_upset(t, h, PointSet::singleton(w.v), alpha);
  if (!t.leq(w.v, x)) return false;
  if (!w.y.subset_of(h.above(h(x)) & up_v)) return false;
  if (!w.z.subset_of(h.below(alpha) & t.up(w.v))) return false;
  const PointSet remainder = up_v - bounded_upset(t, h, w.y, alpha) - downset(t, w.z);
  return remainder.subset_of(u);
}

const MainLemmaWitness& MainLemmaSolver::witness(Element x, int alpha, int subbase_index) {
  const StagedLevel& level = st_.level(alpha);
  if (subbase_index < 0 || subbase_index >= static_cast<int>(level.subbase.size())) {
    throw Error(ErrorCode::InvalidElement, "no subbase set " + std::to_string(subbase_index) +
                                               " at level " + std::to_string(alpha));
  }
  return witness(x, alpha, level.subbase[static_cast<std::size_t>(subbase_index)].set);
}

const MainLemmaWitness& MainLemmaSolver::witness(Element x, int alpha, const PointSet& u) {
  if (x < 0 || x >= st_.tree().size()) throw Error(ErrorCode::InvalidElement, "no element " + std::to_string(x));
  if (alpha < st_.heights()(x) || alpha > st_.height()) {
    throw Error(ErrorCode::InvalidElement, "level " + std::to_string(alpha) + " below the height of " +
                                               std::to_string(x) + " or above the tree");
  }
  if (st_.subbase_index(alpha, u) < 0) {
    throw Error(ErrorCode::InvalidElement, u.to_string() + " is not a subbase set at level " +
                                               std::to_string(alpha));
  }
  const auto key = std::make_tuple(x, alpha, u.word(0), u.word(1));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  MainLemmaWitness w = build(x, alpha, u);
  if (!witness_valid(st_, x, alpha, u, w)) {
    throw Error(ErrorCode::InternalInvariant, "witness for x=" + std::to_string(x) + ", level " +
                                                  std::to_string(alpha) + ", U=" + u.to_string() +
                                                  " fails its constraints");
  }
  return memo_.emplace(key, w).first->second;
}

std::vector<PointSet> MainLemmaSolver::narrow(int gamma, Element point, const PointSet& v) const {
  const StagedLevel& level = st_.level(gamma);
  std::vector<PointSet> picked;
  for (const SubbaseEntry& e : level.subbase)
    if (e.set.contains(point)) picked.push_back(e.set);
  auto meet = [&](std::size_t skip) {
    PointSet acc = level.at_most;
    for (std::size_t i = 0; i < picked.size(); ++i)
      if (i != skip) acc &= picked[i];
    return acc;
  };
  if (picked.empty() || !meet(picked.size()).subset_of(v)) {
    throw Error(ErrorCode::InternalInvariant, "subbase sets around " + std::to_string(point) +
                                                  " do not fit inside " + v.to_string());
  }
  for (std::size_t i = picked.size(); i-- > 0 && picked.size() > 1;) {
    if (meet(i).subset_of(v)) picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return picked;
}

MainLemmaWitness MainLemmaSolver::build(Element x, int alpha, const PointSet& u) {
  const FinitePoset& t = st_.tree();
  const HeightProfile& h = st_.heights();
  const Climb fx = climb(st_, x);
  if (!u.contains(fx.at(alpha))) {
    throw Error(ErrorCode::PreconditionFxNotInU,
                "f_" + std::to_string(x) + "(" + std::to_string(alpha) + ") = " +
                    std::to_string(fx.at(alpha)) + " is not in " + u.to_string());
  }

  // Base case: ↑_α x = {x} because x is maximal in X_{≤α}.
  if (alpha == h(x)) {
    if (ordinal_kind(alpha) == OrdinalKind::Limit) limit_unsupported("main lemma base case");
    return {x, PointSet{}, PointSet{}, alpha};
  }
  if (ordinal_kind(alpha - h(x)) == OrdinalKind::Limit) limit_unsupported("main lemma");

  // Successor case. U must have a shifted form (V, Z̄) since f_x(α) ∈ U.
  const int gamma = alpha - 1;
  const SubbaseEntry& entry =
      st_.level(alpha).subbase[static_cast<std::size_t>(st_.subbase_index(alpha, u))];
  if (!entry.shifted) {
    throw Error(ErrorCode::InternalInvariant, u.to_string() + " contains f_x(alpha) but has no shifted form");
  }
  const PointSet& v_open = entry.shifted->v;
  const PointSet& z_bar = entry.shifted->z;
  const Element f_gamma = fx.at(gamma);
  if (!v_open.contains(f_gamma)) {
    throw Error(ErrorCode::InternalInvariant, "f_x at the previous level is outside V");
  }

  std::vector<MainLemmaWitness> parts;
  for (const PointSet& w : narrow(gamma, f_gamma, v_open)) parts.push_back(witness(x, gamma, w));

  Element v = parts.front().v;
  for (const MainLemmaWitness& p : parts)
    if (t.leq(v, p.v)) v = p.v;
  PointSet y_star;
  PointSet z_star;
  for (const MainLemmaWitness& p : parts) {
    y_star |= p.y;
    z_star |= p.z;
  }
  y_star &= t.up(v);
  z_star &= t.up(v);

  MainLemmaWitness out;
  out.v = v;
  out.level = alpha;
  out.y = y_star | (h.slice(alpha) & z_bar & t.up(v));
  out.z = z_star | (h.slice(gamma) & downset(t, z_bar) & t.up(v));
  return out;
}

MainLemmaWitness main_lemma_witness(const StagedTopology& st, Element x, int alpha, int subbase_index) {
  MainLemmaSolver solver(st);
  return solver.witness(x, alpha, subbase_index);
}

}  // namespace esakia
