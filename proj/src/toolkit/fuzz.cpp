#include "esakia/toolkit/fuzz.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "esakia/error.hpp"
#include "esakia/toolkit/random.hpp"
#include "esakia/toolkit/verify.hpp"

namespace esakia {

namespace {

struct Instance {
  std::string generator;
  std::string document;
  Report report;
};

Instance run_instance(std::uint64_t seed, std::size_t i, int max_n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::mt19937_64 rng(seq);
  const int n = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n)));
  const std::uint64_t sub_seed = rng();
  Instance out;
  FinitePoset p;
  std::optional<PosetKind> kind;
  switch (uniform_below(rng, 3)) {
    case 0:
      out.generator = "tree";
      p = random_tree(sub_seed, n);
      kind = PosetKind::Tree;
      break;
    case 1:
      out.generator = "root_system";
      p = random_root_system(sub_seed, n);
      kind = PosetKind::RootSystem;
      break;
    default:
      out.generator = "poset";
      p = random_poset(sub_seed, n, uniform_unit(rng));
      break;
  }
  out.document = emit_poset(p, kind);
  out.report = verify_poset(p, out.document, kind);
  return out;
}

}  // namespace

Report fuzz(const FuzzOptions& options) {
  if (options.count < 0) throw Error(ErrorCode::InvalidElement, "count must be non-negative");
  if (options.max_n < 1 || options.max_n > 7) throw Error(ErrorCode::SizeCap, "max-n must lie in 1..7");
  Report r("fuzz", "seed=" + std::to_string(options.seed) + ";count=" + std::to_string(options.count) +
                       ";max_n=" + std::to_string(options.max_n));
  std::vector<Instance> instances = r.timed("instances", [&] {
    return sweep<Instance>(
        static_cast<std::size_t>(options.count),
        [&](std::size_t i) { return run_instance(options.seed, i, options.max_n); }, options.exec);
  });
  std::stable_sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) {
    return a.report.digest() < b.report.digest();
  });

  Json rows = Json::array();
  int failed = 0;
  for (const Instance& inst : instances) {
    Json row;
    row["digest"] = inst.report.digest();
    row["generator"] = inst.generator;
    row["size"] = inst.report.data().value("size", 0);
    row["pass"] = inst.report.passed();
    row["failures"] = inst.report.failures();
    rows.push_back(std::move(row));
    if (inst.report.passed()) continue;
    ++failed;
    if (options.quarantine) {
      std::filesystem::create_directories(*options.quarantine);
      std::ofstream(std::filesystem::path(*options.quarantine) / (inst.report.digest() + ".json"))
          << inst.document << "\n";
    }
  }
  r.data()["seed"] = options.seed;
  r.data()["count"] = options.count;
  r.data()["max_n"] = options.max_n;
  r.data()["instances"] = std::move(rows);
  r.add("fuzz_batch", "fuzz", failed == 0, failed,
        failed == 0 ? "" : std::to_string(failed) + " instance(s) failed");
  return r;
}

}  // namespace esakia
