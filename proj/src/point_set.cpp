#include "esakia/point_set.hpp"

#include <algorithm>
#include <sstream>

namespace esakia {

std::string PointSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Element x) {
    if (!first) os << ',';
    os << x;
    first = false;
  });
  os << '}';
  return os.str();
}

void sort_canonical(std::vector<PointSet>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
}

void normalize_family(std::vector<PointSet>& family) {
  sort_canonical(family);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

PointSet union_of(const std::vector<PointSet>& family) {
  PointSet u;
  for (const auto& s : family) u |= s;
  return u;
}

}  // namespace esakia
