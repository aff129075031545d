#pragma once

// Example monoids and random instances shared by the test files.

#include "factorinv/monoid.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace fixtures {

inline factorinv::AffineSemigroup square_example() {
  using factorinv::IntVector;
  return factorinv::AffineSemigroup::from_generators(
      {IntVector{2, 0}, IntVector{0, 2}, IntVector{1, 1}, IntVector{1, 2}});
}

inline factorinv::AffineSemigroup free_monoid(std::size_t k) {
  std::vector<factorinv::IntVector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(factorinv::IntVector::unit(k, i));
  return factorinv::AffineSemigroup::from_generators(gens);
}

inline factorinv::AffineSemigroup block_z2_cubed() {
  return factorinv::block_monoid({2, 2, 2}, factorinv::nonzero_group_elements({2, 2, 2}));
}

/// 2 to max_count generators in [2, max_gen] with gcd 1.
inline factorinv::NumericalSemigroup random_numerical(std::mt19937& rng, std::int64_t max_gen, int max_count = 4) {
  std::uniform_int_distribution<int> count(2, max_count);
  std::uniform_int_distribution<std::int64_t> gen(2, max_gen);
  while (true) {
    std::vector<std::int64_t> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = gen(rng);
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    if (g == 1) return factorinv::NumericalSemigroup(gens);
  }
}

}  // namespace fixtures
