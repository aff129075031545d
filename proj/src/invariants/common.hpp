#pragma once

#include "factorinv/errors.hpp"
#include "factorinv/execution.hpp"
#include "factorinv/integer.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace factorinv::detail {

/// A fiber stored as contiguous int64 rows. Construction throws
/// std::overflow_error if an entry or a length does not fit, so every
/// distance computed from it is exact.
class DenseFiber {
 public:
  explicit DenseFiber(const std::vector<Factorization>& z);

  std::size_t size() const noexcept { return lengths_.size(); }
  std::size_t atoms() const noexcept { return atoms_; }
  std::int64_t entry(std::size_t v, std::size_t i) const { return data_[v * atoms_ + i]; }
  std::int64_t length(std::size_t v) const { return lengths_[v]; }
  std::int64_t distance(std::size_t a, std::size_t b) const;

  /// Bottleneck of a minimum spanning tree on the listed vertices (Prim).
  std::int64_t bottleneck(const std::vector<std::size_t>& vertices) const;
  std::int64_t bottleneck() const;

  /// Vertex indices grouped by length, in increasing length order.
  std::vector<std::vector<std::size_t>> length_classes() const;

 private:
  std::size_t atoms_ = 0;
  std::vector<std::int64_t> data_;
  std::vector<std::int64_t> lengths_;
};

/// Throws InvalidElement when the fiber is empty.
std::vector<Factorization> require_fiber(const AffineSemigroup& m, const IntVector& element);

/// Evaluates fn over the candidates (in parallel per the current settings)
/// and keeps the first candidate with the largest value.
template <class V>
Maximum<V> maximize(const std::vector<IntVector>& candidates, const std::function<V(const IntVector&)>& fn) {
  const auto values =
      parallel_map<V>(candidates.size(), [&](std::size_t i) -> V { return fn(candidates[i]); });
  Maximum<V> best;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!best.at || values[i] > best.value) {
      best.value = values[i];
      best.at = candidates[i];
    }
  return best;
}

}  // namespace factorinv::detail
