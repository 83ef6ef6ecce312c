#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace esakia {

using Element = int;

/// Subset of a finite carrier {0, ..., n-1}, stored as a fixed 128-bit mask.
///
/// The carrier size is not stored; operations that need it (complement,
/// membership validation) take it explicitly.
class PointSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr PointSet() = default;
  PointSet(std::initializer_list<Element> members) {
    for (Element x : members) insert(x);
  }
  explicit PointSet(const std::vector<Element>& members) {
    for (Element x : members) insert(x);
  }

  static PointSet full(int n) {
    PointSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }
  static PointSet singleton(Element x) {
    PointSet s;
    s.insert(x);
    return s;
  }

  bool contains(Element x) const {
    return x >= 0 && x < kCapacity && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
  }
  void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Smallest member, or -1 when empty.
  Element min() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }
  /// Largest member, or -1 when empty.
  Element max() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w] != 0) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  bool subset_of(const PointSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const PointSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }
  /// Relative complement within {0..n-1}.
  PointSet complement(int n) const { return full(n) - *this; }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Element>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  PointSet& operator|=(const PointSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  std::size_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= words_[1] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  std::uint64_t word(int i) const { return words_[i]; }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  static constexpr int kWords = kCapacity / 64;
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order used for every sorted family of sets: by cardinality, then
/// lexicographically by the ascending member list.
inline bool canonical_less(const PointSet& a, const PointSet& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  // Equal sizes: the set holding the smallest element of the symmetric
  // difference comes first.
  const PointSet diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  return a.contains(diff.min());
}

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

void sort_canonical(std::vector<PointSet>& family);
/// Sort canonically and drop duplicates.
void normalize_family(std::vector<PointSet>& family);

PointSet union_of(const std::vector<PointSet>& family);

}  // namespace esakia
