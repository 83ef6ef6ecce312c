#pragma once

#include <string>
#include <vector>

#include "esakia/poset.hpp"

namespace esakia {

/// Tree: a chain of n points descending to a bottom "omega", with an extra
/// leaf "omega1" covering omega beside the chain. n+1 elements.
FinitePoset figure1(int n);

/// Root system: top "0" covering x, y1..yn, and "inf" below x. n+3 elements.
FinitePoset figure2(int n);

/// Looks up a gallery poset by name. Throws UnknownName or InvalidElement (n < 1).
FinitePoset gallery(const std::string& name, int n);
std::vector<std::string> gallery_names();

}  // namespace esakia
