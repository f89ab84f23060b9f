#pragma once

#include <cstdint>

namespace sfac {

/// Counter-based generator (SplitMix64 finalizer over a keyed counter).
/// uniform01(seed, index) depends only on its arguments, so fields can be
/// filled in any order, by any number of workers, with identical results.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of counter_hash.
double uniform01(std::uint64_t seed, std::uint64_t index);

}  // namespace sfac
