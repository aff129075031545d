#include "common.hpp"

#include <set>

namespace factorinv {

using detail::DenseFiber;
using detail::maximize;
using detail::require_fiber;

namespace {

// max over z of min over z' using the atom of d(z, z'); -1 when no
// factorization uses the atom.
std::int64_t tame_value(const DenseFiber& f, std::size_t atom) {
  std::vector<std::size_t> using_atom;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f.entry(v, atom) > 0) using_atom.push_back(v);
  if (using_atom.empty()) return -1;
  std::int64_t worst = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f.entry(v, atom) > 0) continue;
    std::int64_t nearest = -1;
    for (const auto u : using_atom) {
      const std::int64_t d = f.distance(v, u);
      if (nearest < 0 || d < nearest) nearest = d;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

void require_atom(const AffineSemigroup& m, std::size_t atom) {
  if (atom >= m.embedding_dimension())
    throw InvalidArgument("atom index " + std::to_string(atom) + " is out of range");
}

// Apery sets of every atom, as one sorted set.
std::vector<std::int64_t> apery_union(const NumericalSemigroup& s) {
  std::set<std::int64_t> out;
  for (const auto g : s.generators())
    for (const auto w : apery_set(s, g)) out.insert(w);
  return {out.begin(), out.end()};
}

}  // namespace

Integer tame(const AffineSemigroup& m, const IntVector& element, std::size_t atom) {
  require_atom(m, atom);
  const std::int64_t t = tame_value(DenseFiber(m.factorizations(element)), atom);
  if (t < 0)
    throw InvalidArgument(to_string(element) + " is not in " + to_string(m.generator(atom)) + " + M");
  return Integer(t);
}

Maximum<Integer> tame_wrt(const AffineSemigroup& m, std::size_t atom) {
  require_atom(m, atom);
  std::vector<IntVector> elements;
  for (const auto& x : principal_ideal_minimal_factorizations(m, m.generator(atom))) elements.push_back(m.evaluate(x));
  sort_unique(elements);
  return maximize<Integer>(elements, [&](const IntVector& e) { return tame(m, e, atom); });
}

Maximum<Integer> tame(const AffineSemigroup& m) {
  Maximum<Integer> best;
  for (std::size_t i = 0; i < m.embedding_dimension(); ++i) {
    auto t = tame_wrt(m, i);
    if (t.at && (!best.at || t.value > best.value)) best = std::move(t);
  }
  return best;
}

Maximum<Integer> tame(const NumericalSemigroup& s) {
  std::set<std::int64_t> values;
  for (const auto w : apery_union(s))
    if (w != 0)
      for (const auto g : s.generators()) values.insert(g + w);
  std::vector<IntVector> candidates;
  for (const auto v : values) candidates.push_back(IntVector{Integer(v)});
  const AffineSemigroup& a = s.affine();
  return maximize<Integer>(candidates, [&](const IntVector& c) {
    const DenseFiber f(a.factorizations(c));
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < a.embedding_dimension(); ++i) worst = std::max(worst, tame_value(f, i));
    return Integer(worst);
  });
}

Integer omega(const AffineSemigroup& m, const IntVector& element) {
  if (!m.contains(element)) throw InvalidElement(to_string(element) + " is not in the semigroup");
  Integer best = 0;
  for (const auto& x : principal_ideal_minimal_factorizations(m, element)) best = std::max(best, x.total());
  return best;
}

Maximum<Integer> omega(const AffineSemigroup& m) {
  return maximize<Integer>(m.generators(), [&](const IntVector& g) { return omega(m, g); });
}

Integer omega(const NumericalSemigroup& s, std::int64_t element) {
  if (!s.contains(element)) throw InvalidElement(std::to_string(element) + " is not in the semigroup");
  const auto& gens = s.generators();
  Integer best = 0;
  // A minimal x in Z(s + S) has phi(x) - s - m_i outside S for every atom
  // it uses, so phi(x) - s lies in Ap(S, m_i).
  for (const auto w : apery_union(s)) {
    const std::int64_t n = element + w;
    for (const auto& x : s.factorizations(n)) {
      bool minimal = true;
      for (std::size_t i = 0; i < gens.size() && minimal; ++i)
        if (x[i] > 0 && s.contains(w - gens[i])) minimal = false;
      if (minimal) best = std::max(best, x.total());
    }
  }
  return best;
}

Maximum<Integer> omega(const NumericalSemigroup& s) {
  return maximize<Integer>(s.affine().generators(),
                           [&](const IntVector& g) { return omega(s, to_int64(g[0])); });
}

}  // namespace factorinv
