#include "esakia/duality.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "esakia/error.hpp"

namespace esakia {

namespace {

using Profile = std::array<int, 5>;

std::vector<Profile> poset_profiles(const FinitePoset& p) {
  // Longest chain below each element, by increasing |↓x|.
  std::vector<Element> order(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) order[static_cast<std::size_t>(x)] = x;
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return p.down(a).size() < p.down(b).size(); });
  std::vector<int> height(static_cast<std::size_t>(p.size()), 0);
  for (Element x : order) {
    p.lower_covers(x).for_each([&](Element y) {
      height[static_cast<std::size_t>(x)] =
          std::max(height[static_cast<std::size_t>(x)], height[static_cast<std::size_t>(y)] + 1);
    });
  }
  std::vector<Profile> out;
  for (Element x = 0; x < p.size(); ++x) {
    out.push_back({height[static_cast<std::size_t>(x)], p.lower_covers(x).size(),
                   p.upper_covers(x).size(), p.up(x).size(), p.down(x).size()});
  }
  return out;
}

// Generic backtracking bijection search. `compatible(x, fx, y, fy)` checks a
// newly mapped pair against one already mapped.
template <typename Key, typename Compatible>
std::optional<std::vector<int>> search_bijection(const std::vector<Key>& left,
                                                 const std::vector<Key>& right,
                                                 Compatible compatible) {
  const int n = static_cast<int>(left.size());
  if (right.size() != left.size()) return std::nullopt;
  {
    std::vector<Key> a = left;
    std::vector<Key> b = right;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int fx = 0; fx < n; ++fx) {
      if (used[static_cast<std::size_t>(fx)] ||
          !(left[static_cast<std::size_t>(x)] == right[static_cast<std::size_t>(fx)])) {
        continue;
      }
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) ok = compatible(x, fx, y, image[static_cast<std::size_t>(y)]);
      if (!ok) continue;
      image[static_cast<std::size_t>(x)] = fx;
      used[static_cast<std::size_t>(fx)] = true;
      if (self(self, x + 1)) return true;
      used[static_cast<std::size_t>(fx)] = false;
    }
    image[static_cast<std::size_t>(x)] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

std::vector<int> invert(const std::vector<int>& f) {
  std::vector<int> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
  return g;
}

}  // namespace

std::optional<PosetIso> poset_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  auto image = search_bijection(poset_profiles(p), poset_profiles(q), [&](int x, int fx, int y, int fy) {
    return p.leq(x, y) == q.leq(fx, fy) && p.leq(y, x) == q.leq(fy, fx);
  });
  if (!image) return std::nullopt;
  return PosetIso{*image, invert(*image)};
}

std::optional<LatticeIso> lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  auto profiles = [](const FiniteLattice& l) {
    std::vector<std::array<int, 2>> out;
    for (int x = 0; x < l.size(); ++x) {
      int up = 0;
      int down = 0;
      for (int y = 0; y < l.size(); ++y) {
        up += l.leq(x, y) ? 1 : 0;
        down += l.leq(y, x) ? 1 : 0;
      }
      out.push_back({up, down});
    }
    return out;
  };
  auto image = search_bijection(profiles(a), profiles(b), [&](int x, int fx, int y, int fy) {
    return a.leq(x, y) == b.leq(fx, fy) && a.leq(y, x) == b.leq(fy, fx);
  });
  if (!image) return std::nullopt;
  return LatticeIso{*image, invert(*image)};
}

namespace {
bool is_bijection(const std::vector<int>& f, const std::vector<int>& g, int n) {
  if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    const int fx = f[static_cast<std::size_t>(x)];
    if (fx < 0 || fx >= n || g[static_cast<std::size_t>(fx)] != x) return false;
  }
  return true;
}
}  // namespace

bool is_poset_iso(const FinitePoset& p, const FinitePoset& q, const PosetIso& iso) {
  if (p.size() != q.size() || !is_bijection(iso.forward, iso.backward, p.size())) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(iso.forward[static_cast<std::size_t>(x)], iso.forward[static_cast<std::size_t>(y)])) {
        return false;
      }
  return true;
}

bool is_lattice_iso(const FiniteLattice& a, const FiniteLattice& b, const LatticeIso& iso) {
  if (a.size() != b.size() || !is_bijection(iso.forward, iso.backward, a.size())) return false;
  auto f = [&](int x) { return iso.forward[static_cast<std::size_t>(x)]; };
  if (f(a.bottom()) != b.bottom() || f(a.top()) != b.top()) return false;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f(a.meet(x, y)) != b.meet(f(x), f(y)) || f(a.join(x, y)) != b.join(f(x), f(y))) return false;
  return true;
}

PosetDoubleDual double_dual_poset(const FinitePoset& p) {
  PosetDoubleDual out{upset_algebra(p), {}, {}, {}};
  const FiniteLattice& lattice = out.algebra.algebra.lattice();
  out.filters = prime_filters(lattice);
  out.spectrum = spectrum(lattice);
  if (out.spectrum.size() != p.size()) {
    throw Error(ErrorCode::DualityFailure, "spectrum has " + std::to_string(out.spectrum.size()) +
                                               " points, poset has " + std::to_string(p.size()));
  }
  out.iso.forward.assign(static_cast<std::size_t>(p.size()), -1);
  out.iso.backward.assign(static_cast<std::size_t>(p.size()), -1);
  for (Element x = 0; x < p.size(); ++x) {
    PointSet principal;  // {U : x ∈ U}
    for (std::size_t u = 0; u < out.algebra.sets.size(); ++u)
      if (out.algebra.sets[u].contains(x)) principal.insert(static_cast<Element>(u));
    const auto it = std::find(out.filters.begin(), out.filters.end(), principal);
    if (it == out.filters.end()) {
      throw Error(ErrorCode::DualityFailure,
                  "upsets containing " + p.label(x) + " do not form a prime filter");
    }
    const auto j = static_cast<Element>(it - out.filters.begin());
    if (out.iso.backward[static_cast<std::size_t>(j)] >= 0) {
      throw Error(ErrorCode::DualityFailure, "canonical map is not injective at " + p.label(x));
    }
    out.iso.forward[static_cast<std::size_t>(x)] = j;
    out.iso.backward[static_cast<std::size_t>(j)] = x;
  }
  if (!is_poset_iso(p, out.spectrum, out.iso)) {
    throw Error(ErrorCode::DualityFailure, "canonical map does not preserve and reflect order");
  }
  return out;
}

LatticeDoubleDual double_dual_lattice(const FiniteLattice& a) {
  LatticeDoubleDual out;
  out.filters = prime_filters(a);
  out.spectrum = spectrum(a);
  out.upsets = upset_algebra(out.spectrum);
  const int n = a.size();
  if (out.upsets.algebra.size() != n) {
    throw Error(ErrorCode::DualityFailure, "upset algebra of the spectrum has " +
                                               std::to_string(out.upsets.algebra.size()) +
                                               " elements, lattice has " + std::to_string(n));
  }
  out.iso.forward.assign(static_cast<std::size_t>(n), -1);
  out.iso.backward.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    const int j = out.upsets.index_of(gamma(out.filters, x));
    if (j < 0 || out.iso.backward[static_cast<std::size_t>(j)] >= 0) {
      throw Error(ErrorCode::DualityFailure, "gamma is not a bijection at " + a.label(x));
    }
    out.iso.forward[static_cast<std::size_t>(x)] = j;
    out.iso.backward[static_cast<std::size_t>(j)] = x;
  }
  if (!is_lattice_iso(a, out.upsets.algebra.lattice(), out.iso)) {
    throw Error(ErrorCode::DualityFailure, "gamma does not preserve the lattice operations");
  }
  return out;
}

bool horn_verify(const FinitePoset& p) {
  const bool godel = is_godel(upset_algebra(p).algebra).holds;
  const bool root_system = is_root_system(p);
  if (godel != root_system) {
    throw Error(ErrorCode::HornMismatch,
                std::string("upset algebra is ") + (godel ? "" : "not ") +
                    "Goedel but the poset is " + (root_system ? "" : "not ") + "a root system");
  }
  return godel;
}

}  // namespace esakia
