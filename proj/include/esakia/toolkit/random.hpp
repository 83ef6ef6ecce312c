#pragma once

#include <cstdint>
#include <random>

#include "esakia/poset.hpp"

namespace esakia {

/// Unbiased integer in [0, bound) by rejection. Unlike the standard
/// distributions, the sequence is identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);

/// Each non-root element picks its parent uniformly among earlier elements.
FinitePoset random_tree(std::uint64_t seed, int n);
/// Order dual of a random forest; each new element starts a fresh tree with
/// probability 1/4 (the first always does).
FinitePoset random_root_system(std::uint64_t seed, int n);
/// Each pair i < j is related with probability `edge_density`; the result is
/// the transitive closure of those relations.
FinitePoset random_poset(std::uint64_t seed, int n, double edge_density);

}  // namespace esakia
