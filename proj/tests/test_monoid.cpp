#include "doctest.h"
#include "factorinv/errors.hpp"
#include "factorinv/kernel.hpp"
#include "factorinv/monoid.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <random>

using namespace factorinv;
using oracle::Vec;

namespace {

using fixtures::free_monoid;
using fixtures::random_numerical;
using fixtures::square_example;

std::set<std::set<Vec>> class_sets(const std::vector<std::vector<Factorization>>& classes) {
  std::set<std::set<Vec>> out;
  for (const auto& c : classes) out.insert(oracle::to_set(c));
  return out;
}

// Components of the graph on fs joining vectors with a common support index.
std::size_t brute_components(const std::vector<Vec>& fs) {
  std::vector<int> label(fs.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < fs.size(); ++s) {
    if (label[s] != -1) continue;
    std::deque<std::size_t> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < fs.size(); ++w) {
        if (label[w] != -1) continue;
        bool touch = false;
        for (std::size_t i = 0; i < fs[v].size(); ++i) touch = touch || (fs[v][i] > 0 && fs[w][i] > 0);
        if (touch) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return static_cast<std::size_t>(next);
}

// Whether every two factorizations of b are joined by moves z -> z - a + c
// with (a, c) or (c, a) an emitted pair and a <= z.
bool chains_exist(const std::vector<Factorization>& fiber, const std::vector<PresentationPair>& pres) {
  if (fiber.empty()) return true;
  std::set<IntVector> seen{fiber.front()};
  std::deque<IntVector> queue{fiber.front()};
  while (!queue.empty()) {
    const IntVector z = queue.front();
    queue.pop_front();
    for (const auto& p : pres) {
      for (int dir = 0; dir < 2; ++dir) {
        const IntVector& from = dir == 0 ? p.lhs : p.rhs;
        const IntVector& to = dir == 0 ? p.rhs : p.lhs;
        if (!from.leq(z)) continue;
        IntVector next = z - from + to;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  for (const auto& f : fiber)
    if (!seen.count(f)) return false;
  return true;
}

}  // namespace

TEST_CASE("minimal generators") {
  const auto b = AffineSemigroup::from_equations(
      IntMatrix::from_columns({IntVector{0, 1}, IntVector{1, 0}, IntVector{1, 1}}, 2), {Integer(2), Integer(2)});
  CHECK(oracle::to_set(b.generators()) == std::set<Vec>{{0, 0, 2}, {0, 2, 0}, {1, 1, 1}, {2, 0, 0}});
  CHECK(b.is_full());

  const auto m = AffineSemigroup::from_generators(
      {IntVector{2, 0}, IntVector{0, 2}, IntVector{1, 1}, IntVector{1, 2}, IntVector{2, 2}});
  CHECK(m.generators() == square_example().generators());
  CHECK_FALSE(m.is_full());

  const NumericalSemigroup s({10, 17, 24, 31, 43});
  CHECK(s.generators() == std::vector<std::int64_t>{10, 17, 24, 31, 43});
  CHECK(NumericalSemigroup({9, 6, 11, 12, 6}).generators() == std::vector<std::int64_t>{6, 9, 11});
}

TEST_CASE("invalid semigroup definitions") {
  CHECK_THROWS_AS(AffineSemigroup::from_generators({}), InvalidArgument);
  CHECK_THROWS_AS(AffineSemigroup::from_generators({IntVector{1, 0}, IntVector{1}}), InvalidArgument);
  CHECK_THROWS_AS(AffineSemigroup::from_generators({IntVector{1, -1}}), InvalidArgument);
  CHECK_THROWS_AS(AffineSemigroup::from_generators({IntVector{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(AffineSemigroup::from_equations(IntMatrix::from_rows({IntVector{1, 1}}), {}), InvalidArgument);
  CHECK_THROWS_AS(AffineSemigroup::from_equations(IntMatrix::from_rows({IntVector{1, 1}}), {Integer(1)}),
                  MalformedSystem);
}

TEST_CASE("factorizations") {
  const NumericalSemigroup s({6, 9, 11});
  CHECK(oracle::to_set(s.factorizations(66)) ==
        std::set<Vec>{{0, 0, 6}, {1, 3, 3}, {2, 6, 0}, {4, 1, 3}, {5, 4, 0}, {8, 2, 0}, {11, 0, 0}});
  CHECK(s.factorizations(7).empty());
  CHECK(s.factorizations(0) == std::vector<Factorization>{IntVector{0, 0, 0}});

  const auto m = square_example();
  CHECK(oracle::to_set(m.factorizations(IntVector{2, 2})) == std::set<Vec>{{1, 1, 0, 0}, {0, 0, 2, 0}});
  CHECK(m.factorizations(IntVector{0, 0}) == std::vector<Factorization>{IntVector{0, 0, 0, 0}});
  CHECK(m.factorizations(IntVector{1, 0}).empty());
  CHECK(m.factorizations(IntVector{-2, 0}).empty());
  CHECK_THROWS_AS(m.factorizations(IntVector{1}), InvalidArgument);
}

TEST_CASE("factorization fibers on random elements") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const NumericalSemigroup s = random_numerical(rng, 25);
    const auto& gens = s.generators();
    Factorization known(gens.size());
    std::int64_t m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      known[i] = coef(rng);
      m += to_int64(known[i]) * gens[i];
    }
    const auto fiber = s.factorizations(m);
    CAPTURE(m);
    CHECK(std::find(fiber.begin(), fiber.end(), known) != fiber.end());
    std::set<Vec> expect;
    for (const auto& f : oracle::factorizations(Vec(gens.begin(), gens.end()), m)) expect.insert(f);
    CHECK(oracle::to_set(fiber) == expect);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      CHECK(s.affine().evaluate(fiber[i]) == IntVector{Integer(m)});
      for (std::size_t j = 0; j < fiber.size(); ++j)
        if (i != j) CHECK_FALSE(fiber[i].leq(fiber[j]));
    }
  }
}

TEST_CASE("apery sets") {
  const NumericalSemigroup s357({3, 5, 7});
  const NumericalSemigroup s23({2, 3});
  auto scan = [](const NumericalSemigroup& s, std::int64_t n) {
    const auto& g = s.generators();
    const auto in = oracle::membership(Vec(g.begin(), g.end()), n * g.back() + n);
    std::map<std::int64_t, std::int64_t> smallest;
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(in.size()); ++v)
      if (in[static_cast<std::size_t>(v)] && !smallest.count(v % n)) smallest[v % n] = v;
    std::vector<std::int64_t> out;
    for (auto [r, v] : smallest) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(apery_set(s357, 3) == std::vector<std::int64_t>{0, 5, 7});
  CHECK(apery_set(s357, 3) == scan(s357, 3));
  CHECK(apery_set(s23, 2) == std::vector<std::int64_t>{0, 3});
  CHECK(apery_set(s23, 2) == scan(s23, 2));
  CHECK(apery_set(s357, 10) == scan(s357, 10));
  CHECK_THROWS_AS(apery_set(s357, 4), InvalidElement);
  CHECK_THROWS_AS(apery_set(s357, 0), InvalidElement);
  CHECK(s357.frobenius_number() == 4);
  CHECK(NumericalSemigroup({10, 17, 24, 31, 43}).frobenius_number() ==
        [] {
          const auto in = oracle::membership({10, 17, 24, 31, 43}, 1000);
          std::int64_t f = -1;
          for (std::int64_t v = 0; v <= 1000; ++v)
            if (!in[static_cast<std::size_t>(v)]) f = v;
          return f;
        }());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const NumericalSemigroup s = random_numerical(rng, 50);
    const auto& g = s.generators();
    for (const auto n : g) {
      const auto ap = apery_set(s, n);
      REQUIRE(ap.size() == static_cast<std::size_t>(n));
      CHECK(ap.front() == 0);
      CHECK(ap == scan(s, n));
      // Every s <= 3n is k n + w for exactly one w in Ap(S, n).
      for (std::int64_t v = 0; v <= 3 * n; ++v) {
        if (!s.contains(v)) continue;
        int ways = 0;
        for (const auto w : ap)
          if (w <= v && (v - w) % n == 0) ++ways;
        CHECK(ways == 1);
      }
    }
  }
}

TEST_CASE("nabla graphs and R-classes") {
  const auto m = square_example();
  CHECK(class_sets(r_classes(m, IntVector{2, 4})) ==
        std::set<std::set<Vec>>{{{0, 1, 2, 0}, {1, 2, 0, 0}}, {{0, 0, 0, 2}}});
  CHECK(class_sets(r_classes(m, IntVector{4, 4})) ==
        std::set<std::set<Vec>>{{{0, 0, 4, 0}, {1, 0, 0, 2}, {1, 1, 2, 0}, {2, 2, 0, 0}}});
  for (std::size_t i = 0; i < 4; ++i) {
    const auto g = nabla_graph(m, m.generator(i));
    REQUIRE(g.vertices.size() == 1);
    CHECK(g.vertices[0] == IntVector::unit(4, i));
    CHECK(g.components.size() == 1);
  }
}

TEST_CASE("betti elements") {
  CHECK(betti_elements(square_example()) == std::vector<IntVector>{IntVector{2, 2}, IntVector{2, 4}});
  CHECK(betti_elements(free_monoid(3)).empty());

  const NumericalSemigroup s23({2, 3});
  std::vector<std::int64_t> brute;
  for (std::int64_t m = 0; m <= 20; ++m)
    if (brute_components(oracle::factorizations({2, 3}, m)) > 1) brute.push_back(m);
  CHECK(brute == std::vector<std::int64_t>{6});
  CHECK(betti_elements(s23) == brute);
  CHECK(betti_elements(s23.affine()) == std::vector<IntVector>{IntVector{6}});

  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const NumericalSemigroup s = random_numerical(rng, 30);
    std::vector<IntVector> numeric;
    for (auto b : betti_elements(s)) numeric.push_back(IntVector{Integer(b)});
    CAPTURE(s.generators().size());
    CHECK(numeric == betti_elements(s.affine()));
  }
}

TEST_CASE("minimal presentations") {
  const auto m = square_example();
  const auto pres = minimal_presentation(m);
  REQUIRE(pres.size() == 2);
  std::multiset<std::pair<Integer, Integer>> lengths;
  for (const auto& p : pres) {
    CHECK(m.evaluate(p.lhs) == m.evaluate(p.rhs));
    auto a = p.lhs.total(), b = p.rhs.total();
    lengths.insert({std::min(a, b), std::max(a, b)});
  }
  // xy - z^2 and yz^2 - t^2
  CHECK(lengths == std::multiset<std::pair<Integer, Integer>>{{2, 2}, {2, 3}});

  const auto p23 = minimal_presentation(NumericalSemigroup({2, 3}).affine());
  REQUIRE(p23.size() == 1);
  CHECK(oracle::to_set({p23[0].lhs, p23[0].rhs}) == std::set<Vec>{{3, 0}, {0, 2}});
  CHECK(minimal_presentation(free_monoid(2)).empty());

  std::mt19937 rng(9);
  std::vector<AffineSemigroup> cases{m, NumericalSemigroup({6, 9, 11}).affine(),
                                     NumericalSemigroup({10, 17, 24, 31, 43}).affine()};
  for (int i = 0; i < 6; ++i) cases.push_back(random_numerical(rng, 20).affine());
  for (const auto& s : cases) {
    const auto pr = minimal_presentation(s);
    std::size_t expected = 0;
    for (const auto& b : betti_elements(s)) {
      expected += nabla_graph(s, b).components.size() - 1;
      CHECK(chains_exist(s.factorizations(b), pr));
    }
    CHECK(pr.size() == expected);
  }
}

TEST_CASE("primitive elements and I(M)") {
  const auto m = square_example();
  CHECK(m.graver().size() == 4);
  CHECK(lawrence_pairs(m).size() == 12);
  CHECK(primitive_elements(NumericalSemigroup({2, 3}).affine()) ==
        std::vector<IntVector>{IntVector{2}, IntVector{3}, IntVector{6}});
  const auto diag = lawrence_pairs(free_monoid(3));
  REQUIRE(diag.size() == 3);
  for (const auto& p : diag) CHECK(p.lhs == p.rhs);
}

TEST_CASE("principal ideal minimal factorizations") {
  const auto m = square_example();
  const auto mins = principal_ideal_minimal_factorizations(m, IntVector{2, 0});
  CHECK(oracle::to_set(mins) == std::set<Vec>{{0, 0, 2, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}});
  std::set<Vec> images;
  for (const auto& x : mins) images.insert(oracle::to_vec(m.evaluate(x)));
  CHECK(images == std::set<Vec>{{2, 2}, {2, 0}, {2, 4}});
  CHECK(principal_ideal_minimal_factorizations(m, IntVector{0, 0}) == std::vector<Factorization>{IntVector(4)});
  CHECK_THROWS_AS(principal_ideal_minimal_factorizations(m, IntVector{2, 0}, IdealPath::Full), InvalidArgument);

  // Both paths agree on full monoids.
  const auto b = block_monoid({2, 2}, nonzero_group_elements({2, 2}));
  for (const auto& g : b.generators())
    CHECK(principal_ideal_minimal_factorizations(b, g, IdealPath::General) ==
          principal_ideal_minimal_factorizations(b, g, IdealPath::Full));
}

namespace {

// Minimals of Z(m + S) by brute force: a minimal x has phi(x) - m - m_i
// outside S for each atom it uses, so phi(x) <= m + max gen + F.
std::set<Vec> brute_ideal_minimals(const Vec& gens, std::int64_t m) {
  const auto sieve = oracle::membership(gens, 4000);
  std::int64_t frobenius = -1;
  for (std::int64_t v = 0; v <= 4000; ++v)
    if (!sieve[static_cast<std::size_t>(v)]) frobenius = v;
  const std::int64_t limit = m + *std::max_element(gens.begin(), gens.end()) + frobenius;
  const auto in = oracle::membership(gens, limit);
  auto member = [&](std::int64_t v) { return v >= 0 && in[static_cast<std::size_t>(v)]; };
  std::set<Vec> out;
  for (std::int64_t n = m; n <= limit; ++n) {
    if (!member(n - m)) continue;
    for (const auto& x : oracle::factorizations(gens, n)) {
      bool minimal = true;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (x[i] > 0 && member(n - gens[i] - m)) minimal = false;
      if (minimal) out.insert(x);
    }
  }
  return out;
}

std::set<Vec> doubled_system_minimals(const AffineSemigroup& m, const IntVector& element) {
  const IntMatrix& a = m.generator_matrix();
  const auto sols = solve_system(LinearSystem{a.hconcat(a.negated()), element, {}});
  std::vector<IntVector> xs;
  for (const auto& v : sols.inhomogeneous) xs.push_back(v.head(m.embedding_dimension()));
  return oracle::to_set(minimal_elements(xs));
}

}  // namespace

TEST_CASE("principal ideals agree with the doubled system and brute force") {
  const auto sq = square_example();
  for (const auto& m : {IntVector{2, 0}, IntVector{1, 1}, IntVector{3, 5}, IntVector{0, 2}})
    CHECK(oracle::to_set(principal_ideal_minimal_factorizations(sq, m)) == doubled_system_minimals(sq, m));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const NumericalSemigroup s = random_numerical(rng, 20);
    Vec gens(s.generators().begin(), s.generators().end());
    REQUIRE(s.frobenius_number() < 2000);  // keeps the oracle's sieve conclusive
    for (const auto g : gens) {
      const auto got = oracle::to_set(principal_ideal_minimal_factorizations(s.affine(), IntVector{Integer(g)}));
      CHECK(got == brute_ideal_minimals(gens, g));
      CHECK(got == doubled_system_minimals(s.affine(), IntVector{Integer(g)}));
    }
  }
}

TEST_CASE("block monoids and Davenport constants") {
  const auto z22 = nonzero_group_elements({2, 2});
  CHECK(z22 == std::vector<IntVector>{IntVector{0, 1}, IntVector{1, 0}, IntVector{1, 1}});
  CHECK(oracle::to_set(block_monoid({2, 2}, z22).generators()) ==
        std::set<Vec>{{0, 0, 2}, {0, 2, 0}, {1, 1, 1}, {2, 0, 0}});
  CHECK(davenport_constant({2, 2}, z22) == 3);
  CHECK(block_monoid({2}, {IntVector{1}}).generators() == std::vector<IntVector>{IntVector{2}});
  CHECK(davenport_constant({2}, {IntVector{1}}) == 2);

  const auto z23 = nonzero_group_elements({2, 2, 2});
  REQUIRE(z23.size() == 7);
  CHECK(block_monoid({2, 2, 2}, z23).generators().size() == 21);
  CHECK(davenport_constant({2, 2, 2}, z23) == 4);
  // D(Z_3) = 3, D(Z_4) = 4 and D(Z_2 x Z_4) = 2 + 4 - 1.
  CHECK(davenport_constant({3}, nonzero_group_elements({3})) == 3);
  CHECK(davenport_constant({4}, nonzero_group_elements({4})) == 4);
  CHECK(davenport_constant({2, 4}, nonzero_group_elements({2, 4})) == 5);

  CHECK_THROWS_AS(block_monoid({0}, {IntVector{0}}), InvalidGroup);
  CHECK_THROWS_AS(block_monoid({2}, {IntVector{3}}), InvalidGroup);
  CHECK_THROWS_AS(block_monoid({2}, {IntVector{1, 0}}), InvalidGroup);
}

TEST_CASE("lifts") {
  const auto s = NumericalSemigroup({2, 3}).affine();
  CHECK(eq_lift(s).generators() == std::vector<IntVector>{IntVector{2, 1}, IntVector{3, 1}});
  CHECK(hom_lift(s).generators() == std::vector<IntVector>{IntVector{2, 1}, IntVector{3, 1}, IntVector{0, 1}});
}
