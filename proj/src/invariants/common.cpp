#include "common.hpp"

#include <limits>
#include <map>

namespace factorinv::detail {

DenseFiber::DenseFiber(const std::vector<Factorization>& z) {
  if (z.empty()) return;
  atoms_ = z.front().size();
  data_.reserve(z.size() * atoms_);
  lengths_.reserve(z.size());
  for (const auto& x : z) {
    if (x.size() != atoms_) throw InvalidFiber("factorizations of different sizes");
    for (const auto& v : x) data_.push_back(to_int64(v));
    lengths_.push_back(to_int64(x.total()));
  }
}

std::int64_t DenseFiber::distance(std::size_t a, std::size_t b) const {
  const std::int64_t* x = data_.data() + a * atoms_;
  const std::int64_t* y = data_.data() + b * atoms_;
  std::int64_t common = 0;
  for (std::size_t i = 0; i < atoms_; ++i) common += std::min(x[i], y[i]);
  return std::max(lengths_[a], lengths_[b]) - common;
}

std::int64_t DenseFiber::bottleneck(const std::vector<std::size_t>& vertices) const {
  const std::size_t n = vertices.size();
  if (n <= 1) return 0;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> reach(n, kInf);
  std::vector<char> in_tree(n, 0);
  std::int64_t worst = 0;
  std::size_t next = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = next;
    in_tree[v] = 1;
    if (step > 0) worst = std::max(worst, reach[v]);
    std::int64_t best = kInf;
    for (std::size_t u = 0; u < n; ++u) {
      if (in_tree[u]) continue;
      reach[u] = std::min(reach[u], distance(vertices[v], vertices[u]));
      if (reach[u] < best) {
        best = reach[u];
        next = u;
      }
    }
  }
  return worst;
}

std::int64_t DenseFiber::bottleneck() const {
  std::vector<std::size_t> all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return bottleneck(all);
}

std::vector<std::vector<std::size_t>> DenseFiber::length_classes() const {
  std::map<std::int64_t, std::vector<std::size_t>> by_length;
  for (std::size_t v = 0; v < size(); ++v) by_length[lengths_[v]].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [l, vs] : by_length) out.push_back(std::move(vs));
  return out;
}

std::vector<Factorization> require_fiber(const AffineSemigroup& m, const IntVector& element) {
  auto z = m.factorizations(element);
  if (z.empty()) throw InvalidElement(to_string(element) + " is not in the semigroup");
  return z;
}

}  // namespace factorinv::detail
