#include "esakia/order_open.hpp"

#include <algorithm>
#include <string>

#include "esakia/error.hpp"

namespace esakia {

namespace {

using Mask = std::uint32_t;

PointSet to_set(Mask m) {
  PointSet s;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if ((m & 1U) != 0) s.insert(i);
  return s;
}

Mask to_mask(const PointSet& s) { return static_cast<Mask>(s.word(0)); }

}  // namespace

OrderOpenFamily::OrderOpenFamily(int n, std::vector<bool> member)
    : n_(n), member_(std::move(member)) {}

bool OrderOpenFamily::contains(const PointSet& s) const {
  if (!s.subset_of(PointSet::full(n_))) return false;
  return member_[to_mask(s)];
}

std::vector<PointSet> OrderOpenFamily::sets() const {
  std::vector<PointSet> out;
  for (std::size_t m = 0; m < member_.size(); ++m)
    if (member_[m]) out.push_back(to_set(static_cast<Mask>(m)));
  sort_canonical(out);
  return out;
}

std::size_t OrderOpenFamily::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

OrderOpenFamily order_open_family(const FinitePoset& p) {
  const int n = p.size();
  if (n > OrderOpenFamily::kMaxElements) {
    throw Error(ErrorCode::SizeCap, "order-open family needs n <= 16, got " + std::to_string(n));
  }
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const std::size_t universe = std::size_t{1} << n;

  std::vector<Mask> up_mask(static_cast<std::size_t>(n));
  std::vector<Mask> down_mask(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    up_mask[static_cast<std::size_t>(x)] = to_mask(p.up(x));
    down_mask[static_cast<std::size_t>(x)] = to_mask(p.down(x));
  }
  auto closure_of = [&](const std::vector<Mask>& principal, Mask s) {
    Mask out = 0;
    for (int i = 0; i < n; ++i)
      if (((s >> i) & 1U) != 0) out |= principal[static_cast<std::size_t>(i)];
    return out;
  };

  std::vector<bool> member(universe, false);
  std::vector<Mask> members;
  std::vector<Mask> worklist;
  auto add = [&](Mask m) {
    if (!member[m]) {
      member[m] = true;
      members.push_back(m);
      worklist.push_back(m);
    }
  };

  std::vector<Mask> generators;
  for (int x = 0; x < n; ++x) generators.push_back(full & ~(Mask{1} << x));
  add(full);  // empty intersection
  for (Mask g : generators) add(g);

  // Saturate. Intersections only need to be taken with the generators, since
  // every finite intersection is reached one generator at a time. Unions are
  // closed in a separate pass once the cheap closures have settled.
  for (;;) {
    while (!worklist.empty()) {
      const Mask u = worklist.back();
      worklist.pop_back();
      add(full & ~closure_of(up_mask, full & ~u));
      add(full & ~closure_of(down_mask, full & ~u));
      for (Mask g : generators) add(u & g);
    }
    if (members.size() == universe) break;  // the powerset is closed under everything
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) add(members[i] | members[j]);
    if (members.size() == before) break;
  }
  return OrderOpenFamily(n, std::move(member));
}

std::vector<std::size_t> greedy_cover_indices(const std::vector<PointSet>& sets,
                                              const std::vector<std::size_t>& candidates,
                                              const PointSet& target) {
  PointSet reach;
  for (std::size_t i : candidates) reach |= sets[i];
  if (!target.subset_of(reach)) {
    throw Error(ErrorCode::NotACover,
                "candidates miss " + (target - reach).to_string());
  }
  std::vector<std::size_t> order = candidates;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int sa = (sets[a] & target).size();
    const int sb = (sets[b] & target).size();
    return sa != sb ? sa > sb : a < b;
  });
  std::vector<std::size_t> picked;
  PointSet covered;
  for (std::size_t i : order) {
    if (target.subset_of(covered)) break;
    if (!(sets[i] & target).subset_of(covered)) {
      picked.push_back(i);
      covered |= sets[i];
    }
  }
  // Prune in reverse pick order: an early large pick may be subsumed by later ones.
  for (std::size_t k = picked.size(); k-- > 0;) {
    PointSet rest;
    for (std::size_t j = 0; j < picked.size(); ++j)
      if (j != k) rest |= sets[picked[j]];
    if (target.subset_of(rest)) picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<PointSet> order_subcover(const OrderOpenFamily& family,
                                     const std::vector<PointSet>& cover) {
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!family.contains(cover[i])) {
      throw Error(ErrorCode::NotOrderOpen,
                  "cover member " + std::to_string(i) + " " + cover[i].to_string());
    }
  }
  std::vector<std::size_t> all(cover.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<PointSet> out;
  for (std::size_t i : greedy_cover_indices(cover, all, PointSet::full(family.carrier_size())))
    out.push_back(cover[i]);
  return out;
}

std::vector<PointSet> order_subcover(const FinitePoset& p, const std::vector<PointSet>& cover) {
  return order_subcover(order_open_family(p), cover);
}

bool updown_complement_is_order_open(const FinitePoset& p, const OrderOpenFamily& family,
                                     const PointSet& y, const PointSet& z) {
  const PointSet band = upset(p, y) & downset(p, z);
  return family.contains(band.complement(p.size()));
}

bool updown_complement_is_order_open(const FinitePoset& p, const PointSet& y, const PointSet& z) {
  return updown_complement_is_order_open(p, order_open_family(p), y, z);
}

}  // namespace esakia
