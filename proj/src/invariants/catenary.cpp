#include "common.hpp"

#include <set>

namespace factorinv {

using detail::DenseFiber;
using detail::maximize;
using detail::require_fiber;

namespace {

void require_single_element(const AffineSemigroup& m, const std::vector<Factorization>& z) {
  if (z.empty()) throw InvalidFiber("an empty set of factorizations");
  const IntVector first = m.evaluate(z.front());
  for (const auto& x : z) {
    if (!x.is_nonnegative()) throw InvalidFiber(to_string(x) + " has a negative entry");
    if (m.evaluate(x) != first)
      throw InvalidFiber(to_string(x) + " and " + to_string(z.front()) + " factor different elements");
  }
}

std::int64_t equal_value(const DenseFiber& f) {
  std::int64_t worst = 0;
  for (const auto& cls : f.length_classes()) worst = std::max(worst, f.bottleneck(cls));
  return worst;
}

std::int64_t adjacent_value(const DenseFiber& f) {
  const auto classes = f.length_classes();
  std::int64_t worst = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    std::int64_t best = -1;
    for (const auto u : classes[c - 1])
      for (const auto v : classes[c]) {
        const std::int64_t d = f.distance(u, v);
        if (best < 0 || d < best) best = d;
      }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

Integer catenary_of_factorizations(const AffineSemigroup& m, const std::vector<Factorization>& z) {
  require_single_element(m, z);
  return Integer(DenseFiber(z).bottleneck());
}

Integer catenary_by_bridge_removal(const AffineSemigroup& m, const std::vector<Factorization>& z) {
  require_single_element(m, z);
  const DenseFiber f(z);
  const std::size_t n = f.size();
  struct Edge {
    std::int64_t weight;
    std::size_t u, v;
  };
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({f.distance(u, v), u, v});
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
  std::vector<char> alive(edges.size(), 1);
  auto connected_without = [&](std::size_t skip) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (alive[k] && k != skip) {
        adj[edges[k].u].push_back(edges[k].v);
        adj[edges[k].v].push_back(edges[k].u);
      }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n;
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!connected_without(k)) return Integer(edges[k].weight);
    alive[k] = 0;
  }
  return 0;
}

Integer catenary(const AffineSemigroup& m, const IntVector& element) {
  return Integer(DenseFiber(require_fiber(m, element)).bottleneck());
}

Maximum<Integer> catenary(const AffineSemigroup& m) {
  return maximize<Integer>(betti_elements(m), [&](const IntVector& b) { return catenary(m, b); });
}

Maximum<Integer> catenary(const NumericalSemigroup& s) {
  std::set<std::int64_t> values;
  for (std::size_t i = 1; i < s.embedding_dimension(); ++i)
    for (const auto w : s.apery_by_residue())
      if (w != 0) values.insert(s.generators()[i] + w);
  std::vector<IntVector> candidates;
  for (const auto v : values) candidates.push_back(IntVector{Integer(v)});
  return maximize<Integer>(candidates, [&](const IntVector& c) { return catenary(s.affine(), c); });
}

Integer equal_catenary(const AffineSemigroup& m, const IntVector& element) {
  return Integer(equal_value(DenseFiber(require_fiber(m, element))));
}

Integer adjacent_catenary(const AffineSemigroup& m, const IntVector& element) {
  return Integer(adjacent_value(DenseFiber(require_fiber(m, element))));
}

Integer monotone_catenary(const AffineSemigroup& m, const IntVector& element) {
  const DenseFiber f(require_fiber(m, element));
  return Integer(std::max(equal_value(f), adjacent_value(f)));
}

Maximum<Integer> equal_catenary(const AffineSemigroup& m) { return catenary(eq_lift(m)); }

Maximum<Integer> homogeneous_catenary(const AffineSemigroup& m) { return catenary(hom_lift(m)); }

Maximum<Integer> monotone_catenary(const AffineSemigroup& m) {
  std::vector<IntVector> candidates;
  for (const auto& p : primitive_elements(hom_lift(m))) {
    IntVector q = p.head(m.dimension());
    if (!q.is_zero()) candidates.push_back(std::move(q));
  }
  sort_unique(candidates);
  return maximize<Integer>(candidates, [&](const IntVector& c) { return monotone_catenary(m, c); });
}

std::vector<Integer> catenary_values_half_factorial(const AffineSemigroup& m) {
  if (!is_half_factorial(m)) throw InvalidArgument("the monoid is not half-factorial");
  std::vector<Integer> out{0};
  for (const auto& b : betti_elements(m)) out.push_back(catenary(m, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace factorinv
