#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "esakia/parallel/sweep.hpp"
#include "esakia/toolkit/report.hpp"

namespace esakia {

struct FuzzOptions {
  std::uint64_t seed = 1;
  int count = 100;
  int max_n = 6;
  /// Failing documents are written here as <digest>.json.
  std::optional<std::string> quarantine;
  Execution exec = Execution::Parallel;
};

/// Instance i draws a generator (tree, root system, random poset) and a size
/// from a stream seeded by (seed, i), then runs verify_poset. Instances are
/// merged sorted by digest, so the result does not depend on scheduling.
Report fuzz(const FuzzOptions& options);

}  // namespace esakia
