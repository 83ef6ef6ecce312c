#include "esakia/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "esakia/error.hpp"

namespace esakia {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::InvalidElement, "label count does not match carrier size");
  }
  return labels;
}

void check_size(int n) {
  if (n < 0 || n > FinitePoset::kMaxElements) {
    throw Error(ErrorCode::SizeCap, "carrier size " + std::to_string(n) + " outside [0, " +
                                        std::to_string(FinitePoset::kMaxElements) + "]");
  }
}

std::string edge_text(const Cover& c) {
  return "(" + std::to_string(c.lower) + "," + std::to_string(c.upper) + ")";
}

}  // namespace

FinitePoset FinitePoset::from_covers(int n, std::vector<Cover> covers,
                                     std::vector<std::string> labels) {
  check_size(n);
  FinitePoset p;
  p.n_ = n;
  p.labels_ = default_labels(n, std::move(labels));

  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const Cover& c = covers[i];
    if (c.lower < 0 || c.lower >= n || c.upper < 0 || c.upper >= n) {
      throw Error(ErrorCode::InvalidElement, "edge " + edge_text(c) + " outside carrier");
    }
    if (c.lower == c.upper) throw Error(ErrorCode::CycleError, "self-loop " + edge_text(c));
    if (i > 0 && covers[i - 1] == c) {
      throw Error(ErrorCode::NonHasseEdge, "duplicate edge " + edge_text(c));
    }
  }

  // Kahn's algorithm: a topological order exists iff the edge relation is acyclic.
  std::vector<std::vector<Element>> succ(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const Cover& c : covers) {
    succ[static_cast<std::size_t>(c.lower)].push_back(c.upper);
    ++indegree[static_cast<std::size_t>(c.upper)];
  }
  std::vector<Element> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x)
    if (indegree[static_cast<std::size_t>(x)] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Element y : succ[static_cast<std::size_t>(order[head])]) {
      if (--indegree[static_cast<std::size_t>(y)] == 0) order.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::CycleError, "edge relation contains a directed cycle");
  }

  p.up_.assign(static_cast<std::size_t>(n), PointSet{});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    PointSet& u = p.up_[idx(*it)];
    u.insert(*it);
    for (Element y : succ[idx(*it)]) u |= p.up_[idx(y)];
  }

  // An edge (a,b) is redundant when another successor c of a already reaches b.
  for (const Cover& c : covers) {
    for (Element mid : succ[idx(c.lower)]) {
      if (mid != c.upper && p.up_[idx(mid)].contains(c.upper)) {
        throw Error(ErrorCode::NonHasseEdge,
                    "edge " + edge_text(c) + " is implied via " + std::to_string(mid));
      }
    }
  }

  p.covers_ = std::move(covers);
  p.down_.assign(static_cast<std::size_t>(n), PointSet{});
  for (Element x = 0; x < n; ++x) p.up_[idx(x)].for_each([&](Element y) { p.down_[idx(y)].insert(x); });
  p.derive_cover_sets();
  return p;
}

FinitePoset FinitePoset::from_upsets(std::vector<PointSet> principal_upsets,
                                     std::vector<std::string> labels) {
  const int n = static_cast<int>(principal_upsets.size());
  check_size(n);
  const PointSet all = PointSet::full(n);
  for (Element x = 0; x < n; ++x) {
    const PointSet& u = principal_upsets[idx(x)];
    if (!u.subset_of(all)) throw Error(ErrorCode::InvalidElement, "upset leaves the carrier");
    if (!u.contains(x)) {
      throw Error(ErrorCode::NotAPartialOrder, "not reflexive at " + std::to_string(x));
    }
    bool transitive = true;
    u.for_each([&](Element y) {
      if (!principal_upsets[idx(y)].subset_of(u)) transitive = false;
      if (y != x && principal_upsets[idx(y)].contains(x)) {
        throw Error(ErrorCode::NotAPartialOrder,
                    "not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    });
    if (!transitive) {
      throw Error(ErrorCode::NotAPartialOrder, "not transitive at " + std::to_string(x));
    }
  }

  FinitePoset p;
  p.n_ = n;
  p.labels_ = default_labels(n, std::move(labels));
  p.up_ = std::move(principal_upsets);
  p.down_.assign(static_cast<std::size_t>(n), PointSet{});
  for (Element x = 0; x < n; ++x) p.up_[idx(x)].for_each([&](Element y) { p.down_[idx(y)].insert(x); });
  for (Element a = 0; a < n; ++a) {
    const PointSet strictly_above = p.up_[idx(a)] - PointSet::singleton(a);
    strictly_above.for_each([&](Element b) {
      const PointSet between = strictly_above & (p.down_[idx(b)] - PointSet::singleton(b));
      if (between.empty()) p.covers_.push_back({a, b});
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.derive_cover_sets();
  return p;
}

void FinitePoset::derive_cover_sets() {
  upper_covers_.assign(static_cast<std::size_t>(n_), PointSet{});
  lower_covers_.assign(static_cast<std::size_t>(n_), PointSet{});
  for (const Cover& c : covers_) {
    upper_covers_[idx(c.lower)].insert(c.upper);
    lower_covers_[idx(c.upper)].insert(c.lower);
  }
}

std::optional<Element> FinitePoset::find_label(const std::string& label) const {
  for (Element x = 0; x < n_; ++x)
    if (labels_[idx(x)] == label) return x;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

PointSet upset(const FinitePoset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](Element y) { out |= p.up(y); });
  return out;
}

PointSet downset(const FinitePoset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](Element y) { out |= p.down(y); });
  return out;
}

bool is_upset(const FinitePoset& p, const PointSet& s) { return upset(p, s) == s; }
bool is_downset(const FinitePoset& p, const PointSet& s) { return downset(p, s) == s; }

bool immediate_predecessor(const FinitePoset& p, Element x, Element y) {
  return p.upper_covers(x).contains(y);
}

bool is_chain(const FinitePoset& p, const PointSet& s) {
  bool ok = true;
  s.for_each([&](Element x) {
    if (!(s - p.up(x) - p.down(x)).empty()) ok = false;
  });
  return ok;
}

bool is_antichain(const FinitePoset& p, const PointSet& s) {
  bool ok = true;
  s.for_each([&](Element x) {
    if ((s & p.up(x)) != PointSet::singleton(x)) ok = false;
  });
  return ok;
}

PointSet maximal_elements(const FinitePoset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](Element x) {
    if ((s & p.up(x)) == PointSet::singleton(x)) out.insert(x);
  });
  return out;
}

PointSet minimal_elements(const FinitePoset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](Element x) {
    if ((s & p.down(x)) == PointSet::singleton(x)) out.insert(x);
  });
  return out;
}

namespace {
void require_chain(const FinitePoset& p, const PointSet& chain) {
  if (chain.empty()) throw Error(ErrorCode::EmptyChain, "chain is empty");
  if (!chain.subset_of(p.carrier())) throw Error(ErrorCode::InvalidElement, "chain leaves carrier");
  if (!is_chain(p, chain)) {
    throw Error(ErrorCode::NotAChain, chain.to_string() + " has incomparable members");
  }
}
}  // namespace

Element chain_sup(const FinitePoset& p, const PointSet& chain) {
  require_chain(p, chain);
  return maximal_elements(p, chain).min();
}

Element chain_inf(const FinitePoset& p, const PointSet& chain) {
  require_chain(p, chain);
  return minimal_elements(p, chain).min();
}

GapsReport has_enough_gaps(const FinitePoset& p) {
  GapsReport report;
  for (Element x = 0; x < p.size(); ++x) {
    const PointSet above = p.up(x) - PointSet::singleton(x);
    above.for_each([&](Element y) {
      const PointSet interval = p.up(x) & p.down(y);
      std::optional<GapWitness> best;
      interval.for_each([&](Element xp) {
        if (best) return;
        const PointSet candidates = p.upper_covers(xp) & interval;
        if (!candidates.empty()) best = GapWitness{x, y, xp, candidates.min()};
      });
      if (best) {
        report.witnesses.push_back(*best);
      } else {
        report.holds = false;
      }
    });
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<PointSet> components(const FinitePoset& p) {
  const int n = p.size();
  std::vector<Element> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Cover& c : p.covers()) {
    const Element a = find(c.lower);
    const Element b = find(c.upper);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<PointSet> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (Element x = 0; x < n; ++x) {
    const Element r = find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].insert(x);
  }
  return out;
}

namespace {
bool is_tree_on(const FinitePoset& p, const PointSet& part) {
  if (part.empty()) return false;
  if (minimal_elements(p, part).size() != 1) return false;
  bool ok = true;
  part.for_each([&](Element x) {
    if (!is_chain(p, p.down(x))) ok = false;
  });
  return ok;
}
}  // namespace

bool is_tree(const FinitePoset& p) { return is_tree_on(p, p.carrier()); }

bool is_forest(const FinitePoset& p) {
  for (const PointSet& c : components(p))
    if (!is_tree_on(p, c)) return false;
  return true;
}

bool is_root_system(const FinitePoset& p) { return is_forest(order_dual(p)); }

WellOrderedVerdict is_well_ordered(const FinitePoset& p) {
  return {true, "finite poset with " + std::to_string(p.size()) +
                    " elements: every descending chain is finite"};
}

HeightProfile::HeightProfile(std::vector<int> height, int n) : height_(std::move(height)) {
  max_height_ = 0;
  for (int i = 0; i < n; ++i) max_height_ = std::max(max_height_, height_[static_cast<std::size_t>(i)]);
}

PointSet HeightProfile::slice(int alpha) const {
  PointSet s;
  for (std::size_t i = 0; i < height_.size(); ++i)
    if (height_[i] == alpha) s.insert(static_cast<Element>(i));
  return s;
}

PointSet HeightProfile::at_most(int alpha) const {
  PointSet s;
  for (std::size_t i = 0; i < height_.size(); ++i)
    if (height_[i] <= alpha) s.insert(static_cast<Element>(i));
  return s;
}

PointSet HeightProfile::below(int alpha) const { return at_most(alpha - 1); }

PointSet HeightProfile::above(int alpha) const {
  return PointSet::full(static_cast<int>(height_.size())) - at_most(alpha);
}

HeightProfile heights(const FinitePoset& p) {
  if (!is_forest(p)) throw Error(ErrorCode::NotATree, "heights need a tree or forest");
  std::vector<int> h(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) h[static_cast<std::size_t>(x)] = p.down(x).size() - 1;
  return HeightProfile(std::move(h), p.size());
}

PointSet bounded_upset(const FinitePoset& p, const HeightProfile& h, const PointSet& s, int alpha) {
  return h.at_most(alpha) & upset(p, s);
}

// ---------------------------------------------------------------------------

FinitePoset order_dual(const FinitePoset& p) {
  std::vector<Cover> flipped;
  flipped.reserve(p.covers().size());
  for (const Cover& c : p.covers()) flipped.push_back({c.upper, c.lower});
  return FinitePoset::from_covers(p.size(), std::move(flipped), p.labels());
}

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
  std::vector<Cover> covers = p.covers();
  for (const Cover& c : q.covers()) covers.push_back({c.lower + p.size(), c.upper + p.size()});
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  return FinitePoset::from_covers(p.size() + q.size(), std::move(covers), std::move(labels));
}

FinitePoset induced_subposet(const FinitePoset& p, const PointSet& s) {
  const std::vector<Element> keep = s.members();
  std::vector<PointSet> ups;
  std::vector<std::string> labels;
  for (Element x : keep) {
    PointSet u;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (p.leq(x, keep[j])) u.insert(static_cast<Element>(j));
    ups.push_back(u);
    labels.push_back(p.label(x));
  }
  return FinitePoset::from_upsets(std::move(ups), std::move(labels));
}

std::vector<PointSet> all_upsets(const FinitePoset& p, std::size_t limit) {
  std::vector<PointSet> out;
  // Depth-first over antichains: element x may join when it is incomparable to
  // every member chosen so far.
  struct Frame {
    Element next;
    PointSet antichain;
    PointSet blocked;
  };
  std::vector<Frame> stack{{0, PointSet{}, PointSet{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.push_back(upset(p, f.antichain));
    if (out.size() > limit) {
      throw Error(ErrorCode::EnumerationLimit, "more than " + std::to_string(limit) + " upsets");
    }
    for (Element x = p.size() - 1; x >= f.next; --x) {
      if (f.blocked.contains(x)) continue;
      PointSet a = f.antichain;
      a.insert(x);
      stack.push_back({x + 1, a, f.blocked | p.up(x) | p.down(x)});
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<PointSet> all_downsets(const FinitePoset& p, std::size_t limit) {
  return all_upsets(order_dual(p), limit);
}

namespace shapes {

FinitePoset chain(int n) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return FinitePoset::from_covers(n, covers);
}

FinitePoset antichain(int n) { return FinitePoset::from_covers(n, {}); }

FinitePoset vee() { return FinitePoset::from_covers(3, {{0, 1}, {0, 2}}, {"b", "t1", "t2"}); }

FinitePoset wedge() { return FinitePoset::from_covers(3, {{0, 2}, {1, 2}}, {"a", "b", "t"}); }

}  // namespace shapes

}  // namespace esakia
