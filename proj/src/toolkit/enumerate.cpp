#include "esakia/toolkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "esakia/error.hpp"

namespace esakia {

CanonicalForm canonical_form(const FinitePoset& p) {
  const int n = p.size();
  if (n > 8) throw Error(ErrorCode::SizeCap, "canonical form needs n <= 8");
  std::vector<std::array<int, 4>> profile(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    profile[static_cast<std::size_t>(x)] = {p.down(x).size(), p.up(x).size(), p.lower_covers(x).size(),
                                            p.upper_covers(x).size()};
  }
  std::vector<Element> order(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) order[static_cast<std::size_t>(x)] = x;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    const auto& pa = profile[static_cast<std::size_t>(a)];
    const auto& pb = profile[static_cast<std::size_t>(b)];
    return pa != pb ? pa < pb : a < b;
  });

  // Cells of equal profile; orderings permute only within a cell.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           profile[static_cast<std::size_t>(order[j])] == profile[static_cast<std::size_t>(order[i])]) {
      ++j;
    }
    cells.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<Element>& ord) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && p.leq(ord[static_cast<std::size_t>(i)], ord[static_cast<std::size_t>(j)])) {
          code |= std::uint64_t{1} << (i * n + j);
        }
    return code;
  };

  CanonicalForm best;
  for (Element x : order) best.profiles.push_back(profile[static_cast<std::size_t>(x)]);
  best.code = ~std::uint64_t{0};
  std::vector<Element> cur = order;
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      const std::uint64_t c = encode(cur);
      if (c < best.code) {
        best.code = c;
        best.order = cur;
      }
      return;
    }
    auto first = cur.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = cur.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  if (n == 0) best.code = 0;
  return best;
}

FinitePoset canonical_representative(const FinitePoset& p) {
  const CanonicalForm form = canonical_form(p);
  const int n = p.size();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(form.order[static_cast<std::size_t>(i)])] = i;
  std::vector<PointSet> ups(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    p.up(form.order[static_cast<std::size_t>(i)]).for_each([&](Element y) {
      ups[static_cast<std::size_t>(i)].insert(position[static_cast<std::size_t>(y)]);
    });
  return FinitePoset::from_upsets(std::move(ups));
}

std::vector<FinitePoset> enumerate_posets_uncached(int n, Execution exec) {
  if (n < 0 || n > 7) throw Error(ErrorCode::SizeCap, "enumeration supports 0 <= n <= 7");
  if (n == 0) return {FinitePoset::from_covers(0, {})};
  if (n == 1) return {FinitePoset::from_covers(1, {})};

  std::vector<FinitePoset> candidates;
  for (const FinitePoset& base : enumerate_posets_uncached(n - 1, exec)) {
    const Element fresh = n - 1;
    for (const PointSet& below : all_downsets(base)) {
      std::vector<PointSet> ups;
      for (Element x = 0; x < base.size(); ++x) {
        PointSet u = base.up(x);
        if (below.contains(x)) u.insert(fresh);
        ups.push_back(u);
      }
      ups.push_back(PointSet::singleton(fresh));
      candidates.push_back(FinitePoset::from_upsets(std::move(ups)));
    }
  }

  std::vector<CanonicalForm> forms = sweep<CanonicalForm>(
      candidates.size(), [&](std::size_t i) { return canonical_form(candidates[i]); }, exec);

  std::vector<std::size_t> idx(candidates.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return forms[a] < forms[b]; });
  std::vector<FinitePoset> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && forms[idx[k]] == forms[idx[k - 1]]) continue;
    out.push_back(canonical_representative(candidates[idx[k]]));
  }
  return out;
}

const std::vector<FinitePoset>& enumerate_posets(int n, Execution exec) {
  static std::mutex mutex;
  static std::map<int, std::vector<FinitePoset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_posets_uncached(n, exec)).first;
  return it->second;
}

std::vector<FinitePoset> enumerate_posets_up_to(int n, Execution exec) {
  std::vector<FinitePoset> out;
  for (int k = 1; k <= n; ++k) {
    const auto& level = enumerate_posets(k, exec);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace esakia
