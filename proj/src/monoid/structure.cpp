#include "factorinv/errors.hpp"
#include "factorinv/execution.hpp"
#include "factorinv/kernel.hpp"
#include "factorinv/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace factorinv {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

bool share_support(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return true;
  return false;
}

// Factorizations using atom i form a clique, so uniting each factorization
// with its atoms gives the components without listing edges.
std::vector<std::vector<std::size_t>> components_of(const std::vector<Factorization>& vertices, std::size_t atoms) {
  const std::size_t n = vertices.size();
  UnionFind uf(n + atoms);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < atoms; ++i)
      if (vertices[v][i] != 0) uf.unite(v, n + i);
  // Vertices are sorted, so scanning in order yields components sorted
  // internally and ordered by first vertex.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n + atoms, n + atoms);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (slot[root] == n + atoms) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

// Number of R-classes of a nonzero b from membership tests alone: atoms i
// with b - m_i in M, joined when b - m_i - m_j in M.
template <class Contains>
std::size_t class_count(std::size_t atoms, const Contains& contains_minus) {
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < atoms; ++i)
    if (contains_minus(i, atoms)) used.push_back(i);
  UnionFind uf(used.size());
  for (std::size_t a = 0; a < used.size(); ++a)
    for (std::size_t c = a + 1; c < used.size(); ++c)
      if (uf.find(a) != uf.find(c) && contains_minus(used[a], used[c])) uf.unite(a, c);
  std::size_t roots = 0;
  for (std::size_t a = 0; a < used.size(); ++a) roots += uf.find(a) == a;
  return roots;
}

std::vector<IntVector> filter_betti(const AffineSemigroup& m, const std::vector<IntVector>& candidates) {
  const std::size_t e = m.embedding_dimension();
  const auto disconnected = parallel_map<char>(candidates.size(), [&](std::size_t k) -> char {
    const IntVector& b = candidates[k];
    return class_count(e, [&](std::size_t i, std::size_t j) {
             IntVector r = b - m.generator(i);
             if (j < e) r = r - m.generator(j);
             return m.contains(r);
           }) > 1;
  });
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (disconnected[i]) out.push_back(candidates[i]);
  return out;
}

}  // namespace

NablaGraph nabla_graph(const AffineSemigroup& m, const IntVector& element) {
  NablaGraph g;
  g.vertices = m.factorizations(element);
  const std::size_t n = g.vertices.size();
  g.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (share_support(g.vertices[i], g.vertices[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  g.components = components_of(g.vertices, m.embedding_dimension());
  return g;
}

std::vector<std::vector<Factorization>> r_classes(const AffineSemigroup& m, const IntVector& element) {
  const auto vertices = m.factorizations(element);
  std::vector<std::vector<Factorization>> out;
  for (const auto& comp : components_of(vertices, m.embedding_dimension())) {
    std::vector<Factorization> cls;
    for (auto v : comp) cls.push_back(vertices[v]);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<IntVector> betti_elements(const AffineSemigroup& m) {
  std::vector<IntVector> candidates;
  for (const auto& x : m.graver()) candidates.push_back(m.evaluate(x.positive_part()));
  sort_unique(candidates);
  return filter_betti(m, candidates);
}

std::vector<std::int64_t> betti_elements(const NumericalSemigroup& s) {
  std::set<std::int64_t> candidates;
  for (std::size_t i = 1; i < s.embedding_dimension(); ++i)
    for (const auto w : s.apery_by_residue())
      if (w != 0) candidates.insert(s.generators()[i] + w);
  const std::vector<std::int64_t> cs(candidates.begin(), candidates.end());
  const auto& gens = s.generators();
  const std::size_t e = gens.size();
  const auto disconnected = parallel_map<char>(cs.size(), [&](std::size_t k) -> char {
    return class_count(e, [&](std::size_t i, std::size_t j) {
             return s.contains(cs[k] - gens[i] - (j < e ? gens[j] : 0));
           }) > 1;
  });
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (disconnected[k]) out.push_back(cs[k]);
  return out;
}

std::vector<PresentationPair> minimal_presentation(const AffineSemigroup& m) {
  std::vector<PresentationPair> out;
  for (const auto& b : betti_elements(m)) {
    const auto classes = r_classes(m, b);
    for (std::size_t j = 1; j < classes.size(); ++j) out.push_back({classes[0][0], classes[j][0]});
  }
  return out;
}

std::vector<PresentationPair> lawrence_pairs(const AffineSemigroup& m) {
  std::vector<PresentationPair> out;
  for (const auto& x : m.graver()) {
    out.push_back({x.positive_part(), x.negative_part()});
    out.push_back({x.negative_part(), x.positive_part()});
  }
  const std::size_t e = m.embedding_dimension();
  for (std::size_t i = 0; i < e; ++i) out.push_back({IntVector::unit(e, i), IntVector::unit(e, i)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> primitive_elements(const AffineSemigroup& m) {
  std::vector<IntVector> out = m.generators();
  for (const auto& x : m.graver()) out.push_back(m.evaluate(x.positive_part()));
  sort_unique(out);
  return out;
}

std::vector<Factorization> principal_ideal_minimal_factorizations(const AffineSemigroup& m, const IntVector& element,
                                                                  IdealPath path) {
  if (element.size() != m.dimension())
    throw InvalidArgument("element " + to_string(element) + " does not match the semigroup dimension");
  if (path == IdealPath::Automatic) path = m.is_full() ? IdealPath::Full : IdealPath::General;
  const IntMatrix& a = m.generator_matrix();
  const std::size_t e = m.embedding_dimension();
  std::vector<IntVector> xs;
  if (path == IdealPath::Full) {
    if (!m.is_full()) throw InvalidArgument("the inequality path needs a monoid defined by equations");
    // A x - s = m with slack s >= 0.
    IntMatrix slack(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) slack(i, i) = -1;
    for (const auto& v : solve_system(LinearSystem{a.hconcat(slack), element, {}}).inhomogeneous)
      xs.push_back(v.head(e));
  } else {
    // Minimal (x, y) with A x - A y = m have disjoint supports, and on such
    // pairs the componentwise order is the conformal order of x - y. So they
    // are (u+, u-) for the conformally minimal u with A u = m.
    for (const auto& u : conformal_minimal_solutions(a, element)) xs.push_back(u.positive_part());
  }
  return minimal_elements(std::move(xs));
}

AffineSemigroup block_monoid(const std::vector<Integer>& moduli, const std::vector<IntVector>& elements) {
  if (moduli.empty()) throw InvalidGroup("the group needs at least one cyclic factor");
  for (const auto& d : moduli)
    if (d < 2) throw InvalidGroup("modulus " + to_string(d) + " is below 2");
  if (elements.empty()) throw InvalidArgument("a block monoid needs at least one group element");
  for (const auto& g : elements) {
    if (g.size() != moduli.size())
      throw InvalidGroup("group element " + to_string(g) + " does not have " + std::to_string(moduli.size()) +
                         " coordinates");
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] < 0 || g[i] >= moduli[i])
        throw InvalidGroup("group element " + to_string(g) + " is not reduced modulo " + to_string(moduli[i]));
  }
  std::vector<std::optional<Integer>> mods(moduli.begin(), moduli.end());
  return AffineSemigroup::from_equations(IntMatrix::from_columns(elements, moduli.size()), std::move(mods));
}

Integer davenport_constant(const std::vector<Integer>& moduli, const std::vector<IntVector>& elements) {
  const AffineSemigroup b = block_monoid(moduli, elements);
  Integer best = 0;
  for (const auto& g : b.generators()) best = std::max(best, g.total());
  return best;
}

std::vector<IntVector> nonzero_group_elements(const std::vector<Integer>& moduli) {
  for (const auto& d : moduli)
    if (d < 2) throw InvalidGroup("modulus " + to_string(d) + " is below 2");
  std::vector<IntVector> out;
  IntVector g(moduli.size());
  while (true) {
    std::size_t i = moduli.size();
    while (i > 0 && g[i - 1] + 1 == moduli[i - 1]) g[--i] = 0;
    if (i == 0) break;
    ++g[i - 1];
    out.push_back(g);
  }
  return out;
}

AffineSemigroup eq_lift(const AffineSemigroup& m) {
  std::vector<IntVector> gens;
  for (const auto& g : m.generators()) gens.push_back(g.append(IntVector{1}));
  return AffineSemigroup::from_generators(std::move(gens));
}

AffineSemigroup hom_lift(const AffineSemigroup& m) {
  std::vector<IntVector> gens;
  for (const auto& g : m.generators()) gens.push_back(g.append(IntVector{1}));
  gens.push_back(IntVector(m.dimension()).append(IntVector{1}));
  return AffineSemigroup::from_generators(std::move(gens));
}

std::string to_string(const PresentationPair& p) { return "(" + to_string(p.lhs) + "," + to_string(p.rhs) + ")"; }

}  // namespace factorinv
