#include "esakia/toolkit/random.hpp"

#include <limits>
#include <string>

#include "esakia/error.hpp"

namespace esakia {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidElement, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void require_size(int n) {
  if (n < 1 || n > FinitePoset::kMaxElements) {
    throw Error(ErrorCode::SizeCap, "random generators need 1 <= n <= " +
                                        std::to_string(FinitePoset::kMaxElements));
  }
}

FinitePoset forest_from_parents(const std::vector<Element>& parent) {
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) covers.push_back({parent[i], static_cast<Element>(i)});
  return FinitePoset::from_covers(static_cast<int>(parent.size()), covers);
}

}  // namespace

FinitePoset random_tree(std::uint64_t seed, int n) {
  require_size(n);
  std::mt19937_64 rng(seed);
  std::vector<Element> parent(static_cast<std::size_t>(n), -1);
  for (int i = 1; i < n; ++i) parent[static_cast<std::size_t>(i)] = static_cast<Element>(uniform_below(rng, static_cast<std::uint64_t>(i)));
  return forest_from_parents(parent);
}

FinitePoset random_root_system(std::uint64_t seed, int n) {
  require_size(n);
  std::mt19937_64 rng(seed);
  std::vector<Element> parent(static_cast<std::size_t>(n), -1);
  for (int i = 1; i < n; ++i) {
    if (uniform_below(rng, 4) == 0) continue;  // new root
    parent[static_cast<std::size_t>(i)] = static_cast<Element>(uniform_below(rng, static_cast<std::uint64_t>(i)));
  }
  return order_dual(forest_from_parents(parent));
}

FinitePoset random_poset(std::uint64_t seed, int n, double edge_density) {
  require_size(n);
  std::mt19937_64 rng(seed);
  std::vector<PointSet> ups(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    PointSet& u = ups[static_cast<std::size_t>(i)];
    u.insert(i);
    for (int j = i + 1; j < n; ++j)
      if (uniform_unit(rng) < edge_density) u |= ups[static_cast<std::size_t>(j)];
  }
  return FinitePoset::from_upsets(std::move(ups));
}

}  // namespace esakia
