#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fakenews {

// Portable replacements for std::uniform_int_distribution / std::shuffle,
// whose outputs differ between standard library implementations.

// Uniform integer in [0, bound) by rejection sampling; bound must be > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// [0, 1, ..., n-1] shuffled.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::mt19937_64& rng);

}  // namespace fakenews
