#include "esakia/constructions/gallery.hpp"

#include "esakia/error.hpp"

namespace esakia {

namespace {
void require_positive(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidElement, "gallery size must be at least 1");
}
}  // namespace

FinitePoset figure1(int n) {
  require_positive(n);
  // 0 = omega, 1 = omega1, then the chain from just above omega up to "0".
  std::vector<std::string> labels{"omega", "omega1"};
  std::vector<Cover> covers{{0, 1}};
  Element below = 0;
  for (int k = n - 2; k >= 0; --k) {
    const auto idx = static_cast<Element>(labels.size());
    labels.push_back(std::to_string(k));
    covers.push_back({below, idx});
    below = idx;
  }
  return FinitePoset::from_covers(static_cast<int>(labels.size()), covers, labels);
}

FinitePoset figure2(int n) {
  require_positive(n);
  std::vector<std::string> labels{"0", "x", "inf"};
  std::vector<Cover> covers{{1, 0}, {2, 1}};
  for (int i = 1; i <= n; ++i) {
    covers.push_back({static_cast<Element>(labels.size()), 0});
    labels.push_back("y" + std::to_string(i));
  }
  return FinitePoset::from_covers(static_cast<int>(labels.size()), covers, labels);
}

FinitePoset gallery(const std::string& name, int n) {
  if (name == "figure1") return figure1(n);
  if (name == "figure2") return figure2(n);
  throw Error(ErrorCode::UnknownName, "no gallery entry '" + name + "'");
}

std::vector<std::string> gallery_names() { return {"figure1", "figure2"}; }

}  // namespace esakia
