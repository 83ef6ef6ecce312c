#include "esakia/constructions/staged.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "esakia/error.hpp"

namespace esakia {

void limit_unsupported(const char* where) {
  throw Error(ErrorCode::LimitHeightUnsupported, std::string(where) + " reached a limit level");
}

const StagedLevel& StagedTopology::level(int alpha) const {
  if (alpha < 0 || alpha > height()) {
    throw Error(ErrorCode::InvalidElement, "level " + std::to_string(alpha) + " outside 0.." +
                                               std::to_string(height()));
  }
  return levels_[static_cast<std::size_t>(alpha)];
}

int StagedTopology::subbase_index(int alpha, const PointSet& s) const {
  const StagedLevel& l = level(alpha);
  auto it = l.index.find(s);
  return it == l.index.end() ? -1 : it->second;
}

namespace {

// Union closure of the base, or nullopt past the cap.
std::optional<std::vector<PointSet>> enumerate_opens(const FiniteTopology& t) {
  std::unordered_set<PointSet, PointSetHash> seen{PointSet{}};
  std::vector<PointSet> opens{PointSet{}};
  for (std::size_t head = 0; head < opens.size(); ++head) {
    for (const PointSet& b : t.base()) {
      const PointSet next = opens[head] | b;
      if (seen.insert(next).second) {
        if (opens.size() >= StagedTopology::kMaxOpens) return std::nullopt;
        opens.push_back(next);
      }
    }
  }
  sort_canonical(opens);
  return opens;
}

std::vector<PointSet> restricted_opens(const FiniteTopology& t) {
  std::vector<PointSet> v{PointSet{}};
  const auto& base = t.base();
  for (std::size_t i = 0; i < base.size(); ++i) {
    v.push_back(base[i]);
    for (std::size_t j = 0; j < i; ++j) v.push_back(base[i] | base[j]);
  }
  normalize_family(v);
  return v;
}

void finish_level(StagedLevel& level, bool& restricted) {
  level.index.clear();
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < level.subbase.size(); ++i) {
    level.index.emplace(level.subbase[i].set, static_cast<int>(i));
    sets.push_back(level.subbase[i].set);
  }
  level.topology = generate_base(sets, level.at_most);
  if (auto opens = enumerate_opens(level.topology)) {
    level.opens = std::move(*opens);
    level.opens_complete = true;
  } else {
    level.opens.clear();
    level.opens_complete = false;
    restricted = true;
  }
}

bool entry_less(const SubbaseEntry& a, const SubbaseEntry& b) { return canonical_less(a.set, b.set); }

}  // namespace

StagedTopology staged_topology(const FinitePoset& tree, const PlusChoice& choice) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "staged topology needs a tree");
  StagedTopology st;
  st.tree_ = tree;
  st.heights_ = heights(tree);
  const HeightProfile& h = st.heights_;
  const int n = tree.size();
  st.plus_.assign(static_cast<std::size_t>(n), -1);

  // P_α and x⁺.
  for (Element x = 0; x < n; ++x) {
    const PointSet options = tree.upper_covers(x);  // X_{ĥ(x)+1} ∩ ↑x in a tree
    if (options.empty()) continue;
    Element pick = options.min();
    if (static_cast<std::size_t>(x) < choice.size() && choice[static_cast<std::size_t>(x)] >= 0) {
      pick = choice[static_cast<std::size_t>(x)];
      if (!options.contains(pick)) {
        throw Error(ErrorCode::InvalidElement, "choice " + std::to_string(pick) + " for " +
                                                   std::to_string(x) + " is not an upper cover");
      }
    }
    st.plus_[static_cast<std::size_t>(x)] = pick;
  }

  for (int alpha = 0; alpha <= h.max_height(); ++alpha) {
    StagedLevel level;
    level.alpha = alpha;
    level.slice = h.slice(alpha);
    level.at_most = h.at_most(alpha);
    level.slice.for_each([&](Element x) {
      if (st.plus_[static_cast<std::size_t>(x)] >= 0) level.p_set.insert(x);
    });

    switch (ordinal_kind(alpha)) {
      case OrdinalKind::Zero:
        level.subbase.push_back({level.at_most, SubbaseFamily::Root, std::nullopt});
        break;
      case OrdinalKind::Successor: {
        const StagedLevel& prev = st.levels_.back();
        PointSet plus_images;
        prev.p_set.for_each([&](Element x) { plus_images.insert(st.plus_[static_cast<std::size_t>(x)]); });
        level.s_set = level.slice - plus_images;

        std::unordered_map<PointSet, std::size_t, PointSetHash> seen;
        auto emit = [&](const PointSet& s, SubbaseFamily family, std::optional<ShiftedForm> form) {
          auto [it, fresh] = seen.emplace(s, level.subbase.size());
          if (fresh) {
            level.subbase.push_back({s, family, form});
          } else if (form && !level.subbase[it->second].shifted) {
            level.subbase[it->second].shifted = form;
          }
        };
        level.s_set.for_each([&](Element x) { emit(PointSet::singleton(x), SubbaseFamily::Singleton, std::nullopt); });
        prev.p_set.for_each([&](Element x) { emit(tree.down(x), SubbaseFamily::Downset, std::nullopt); });

        const std::vector<Element> domain = (prev.p_set | level.s_set).members();
        if (static_cast<int>(domain.size()) > StagedTopology::kMaxShiftDomain) {
          throw Error(ErrorCode::EnumerationLimit,
                      "level " + std::to_string(alpha) + " has " + std::to_string(domain.size()) +
                          " removable points; at most " +
                          std::to_string(StagedTopology::kMaxShiftDomain) + " are enumerated");
        }
        std::vector<PointSet> z_downs;  // ↓Z for each bitmask
        std::vector<PointSet> z_sets;
        const std::size_t masks = std::size_t{1} << domain.size();
        for (std::size_t m = 0; m < masks; ++m) {
          PointSet z;
          for (std::size_t i = 0; i < domain.size(); ++i)
            if (((m >> i) & 1U) != 0) z.insert(domain[i]);
          z_sets.push_back(z);
          z_downs.push_back(downset(tree, z));
        }
        const std::vector<PointSet> vs =
            prev.opens_complete ? prev.opens : restricted_opens(prev.topology);
        for (const PointSet& v : vs) {
          const PointSet lifted = v | bounded_upset(tree, h, v & prev.slice, alpha);
          for (std::size_t m = 0; m < masks; ++m) {
            emit(lifted - z_downs[m], SubbaseFamily::Shifted, ShiftedForm{v, z_sets[m]});
          }
        }
        break;
      }
      case OrdinalKind::Limit:
        limit_unsupported("staged subbase");
    }
    std::sort(level.subbase.begin(), level.subbase.end(), entry_less);
    finish_level(level, st.restricted_);
    st.levels_.push_back(std::move(level));
  }
  return st;
}

std::vector<PlusChoice> all_plus_choices(const FinitePoset& tree, std::size_t limit) {
  std::vector<PlusChoice> out{PlusChoice(static_cast<std::size_t>(tree.size()), -1)};
  for (Element x = 0; x < tree.size(); ++x) {
    const std::vector<Element> options = tree.upper_covers(x).members();
    if (options.empty()) continue;
    std::vector<PlusChoice> next;
    for (const PlusChoice& c : out) {
      for (Element o : options) {
        PlusChoice d = c;
        d[static_cast<std::size_t>(x)] = o;
        next.push_back(std::move(d));
        if (next.size() > limit) {
          throw Error(ErrorCode::EnumerationLimit, "more than " + std::to_string(limit) + " choice maps");
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

bool shifted_open_in_subbase(const StagedTopology& st, int beta, int alpha, const PointSet& u) {
  if (!(beta < alpha) || alpha > st.height() || beta < 0) {
    throw Error(ErrorCode::InvalidElement, "need 0 <= beta < alpha <= height");
  }
  const StagedLevel& lb = st.level(beta);
  if (!is_open(lb.topology, u)) {
    throw Error(ErrorCode::NotOpenAtLevel, u.to_string() + " is not open at level " + std::to_string(beta));
  }
  const PointSet shifted = u | bounded_upset(st.tree(), st.heights(), u & lb.slice, alpha);
  return st.subbase_index(alpha, shifted) >= 0;
}

Climb climb(const StagedTopology& st, Element x) {
  if (x < 0 || x >= st.tree().size()) throw Error(ErrorCode::InvalidElement, "no element " + std::to_string(x));
  Climb c;
  c.origin = x;
  c.start = st.heights()(x);
  c.values.push_back(x);
  for (int alpha = c.start; alpha < st.height(); ++alpha) {
    // Only successor steps occur; a limit clause would take a supremum here.
    if (ordinal_kind(alpha + 1) == OrdinalKind::Limit) limit_unsupported("climb");
    const Element cur = c.values.back();
    const bool in_p = st.level(alpha).p_set.contains(cur);
    c.values.push_back(in_p ? st.plus(cur) : cur);
  }
  return c;
}

ClimbLaws check_climb(const StagedTopology& st, const Climb& c) {
  ClimbLaws laws;
  const FinitePoset& t = st.tree();
  for (int a = c.start; a <= c.end(); ++a) {
    for (int b = a; b <= c.end(); ++b)
      if (!t.leq(c.at(a), c.at(b))) laws.order_preserving = false;
    const PointSet& below = st.level(a).at_most;
    if (!below.contains(c.at(a)) || !(maximal_elements(t, below).contains(c.at(a)))) laws.maximal = false;
    if (a > c.start && st.level(a).s_set.contains(c.at(a))) laws.avoids_singletons = false;
  }
  return laws;
}

}  // namespace esakia
