// One line per acceptance criterion; exit status 1 when any fails.

#include "factorinv/errors.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/kernel.hpp"
#include "factorinv/monoid.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace factorinv;
using oracle::Mat;
using oracle::Vec;

namespace {

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 when untimed
  std::function<void(Check&)> body;
};

int run_all(const std::vector<Criterion>& criteria) {
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      std::ostringstream os;
      os << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      check.failures.push_back(os.str());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %2d %s %8.3f s  %s\n", c.id, ok ? "PASS" : "FAIL", seconds, c.title.c_str());
    for (const auto& f : check.failures) std::printf("                 - %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed;
}

IntVector num(std::int64_t v) { return IntVector{Integer(v)}; }

std::set<Vec> up_to_sign(const std::vector<IntVector>& vs) {
  std::set<Vec> out;
  for (const auto& v : vs) {
    Vec a = oracle::to_vec(v), b = a;
    for (auto& x : b) x = -x;
    out.insert(std::min(a, b));
  }
  return out;
}

std::set<std::set<Vec>> class_sets(const std::vector<std::vector<Factorization>>& classes) {
  std::set<std::set<Vec>> out;
  for (const auto& c : classes) out.insert(oracle::to_set(c));
  return out;
}

std::set<Vec> inside(const std::set<Vec>& vs, std::int64_t bound) {
  std::set<Vec> out;
  for (const auto& v : vs)
    if (std::all_of(v.begin(), v.end(), [&](std::int64_t e) { return e <= bound && e >= -bound; })) out.insert(v);
  return out;
}

// Least N whose threshold graph on z is connected.
std::int64_t threshold_catenary(const std::vector<Vec>& z) {
  for (std::int64_t n = 0;; ++n) {
    std::vector<char> seen(z.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < z.size(); ++u)
        if (!seen[u] && oracle::distance(z[v], z[u]) <= n) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached == z.size()) return n;
  }
}

std::vector<Factorization> to_fiber(const std::vector<Vec>& vs) {
  std::vector<Factorization> out;
  for (const auto& v : vs) out.push_back(oracle::to_iv(v));
  return out;
}

}  // namespace

int main() {
  const auto square = fixtures::square_example();
  const NumericalSemigroup s69({6, 9, 11});
  const NumericalSemigroup big({10, 17, 24, 31, 43});

  const std::vector<Criterion> criteria = {
      {1, "factorizations of 66 in <6,9,11>", 1.0,
       [&](Check& check) {
         check(oracle::to_set(s69.factorizations(66)) ==
                   std::set<Vec>{{0, 0, 6}, {1, 3, 3}, {2, 6, 0}, {4, 1, 3}, {5, 4, 0}, {8, 2, 0}, {11, 0, 0}},
               "Z(66) differs from the 7 printed vectors");
         check(square.factorizations(IntVector{2, 4}).size() == 3, "Z((2,4)) in M does not have 3 elements");
       }},
      {2, "distance", 0,
       [&](Check& check) {
         check(distance(IntVector{11, 0, 0}, IntVector{0, 0, 6}) == 11, "d((11,0,0),(0,0,6)) != 11");
         check(distance(IntVector{0, 7, 0, 0}, IntVector{2, 1, 2, 0}) == 6, "d((0,7,0,0),(2,1,2,0)) != 6");
       }},
      {3, "catenary degree of elements", 2.0,
       [&](Check& check) {
         check(catenary(s69.affine(), num(66)) == 4, "c(66) in <6,9,11> != 4");
         check(catenary(NumericalSemigroup({10, 11, 23, 35}).affine(), num(77)) == 3, "c(77) in <10,11,23,35> != 3");
       }},
      {4, "Betti elements, R-classes and presentation of M = <(2,0),(0,2),(1,1),(1,2)>", 0,
       [&](Check& check) {
         const auto betti = betti_elements(square);
         check(betti == std::vector<IntVector>{IntVector{2, 2}, IntVector{2, 4}}, "Betti(M) != {(2,2),(2,4)}");
         check(class_sets(r_classes(square, IntVector{4, 4})) ==
                   std::set<std::set<Vec>>{{{0, 0, 4, 0}, {1, 0, 0, 2}, {1, 1, 2, 0}, {2, 2, 0, 0}}},
               "R-classes of (4,4)");
         check(class_sets(r_classes(square, IntVector{2, 4})) ==
                   std::set<std::set<Vec>>{{{0, 1, 2, 0}, {1, 2, 0, 0}}, {{0, 0, 0, 2}}},
               "R-classes of (2,4)");
         check(class_sets(r_classes(square, IntVector{2, 2})) == std::set<std::set<Vec>>{{{1, 1, 0, 0}}, {{0, 0, 2, 0}}},
               "R-classes of (2,2)");
         const auto pres = minimal_presentation(square);
         std::multiset<std::pair<Integer, Integer>> lengths;
         for (const auto& p : pres) {
           const Integer a = p.lhs.total(), b = p.rhs.total();
           lengths.insert({std::min(a, b), std::max(a, b)});
           check(square.evaluate(p.lhs) == square.evaluate(p.rhs), "presentation pair " + to_string(p) + " not in ker");
         }
         check(pres.size() == 2, "minimal presentation does not have 2 pairs");
         check(lengths == std::multiset<std::pair<Integer, Integer>>{{2, 2}, {2, 3}},
               "presentation lengths differ from xy - z^2, yz^2 - t^2");
         std::vector<Integer> values;
         for (const auto& b : betti) values.push_back(catenary(square, b));
         check(values == std::vector<Integer>{2, 3}, "catenary degrees of the Betti elements != [2,3]");
         check(catenary(square).value == 3, "c(M) != 3");
       }},
      {5, "Graver basis and I(M)", 0,
       [&](Check& check) {
         check(up_to_sign(square.graver()) ==
                   up_to_sign({IntVector{1, 0, -4, 2}, IntVector{0, 1, 2, -2}, IntVector{1, 1, -2, 0}, IntVector{1, 2, 0, -2}}),
               "Graver basis differs from the 4 printed vectors");
         check(square.graver().size() == 4, "Graver basis does not have 4 sign classes");
         check(lawrence_pairs(square).size() == 12, "|I(M)| != 12");
       }},
      {6, "principal ideal (2,0) + M", 0,
       [&](Check& check) {
         check(oracle::to_set(principal_ideal_minimal_factorizations(square, IntVector{2, 0})) ==
                   std::set<Vec>{{0, 0, 2, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}},
               "Minimals of Z((2,0)+M)");
         const IntMatrix a = IntMatrix::from_rows(
             {IntVector{2, 0, 1, 1, -2, 0, -1, -1}, IntVector{0, 2, 1, 2, 0, -2, -1, -2}});
         const std::set<Vec> inhom = {{0, 0, 4, 0, 0, 0, 0, 2}, {0, 0, 2, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 2, 0, 2, 0, 0}};
         const std::set<Vec> hom = {{1, 0, 0, 2, 0, 0, 4, 0}, {0, 0, 4, 0, 1, 0, 0, 2}, {1, 2, 0, 0, 0, 0, 0, 2},
                                    {0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1}, {0, 1, 2, 0, 0, 0, 0, 2},
                                    {0, 0, 2, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 2, 1, 2, 0, 0},
                                    {1, 0, 0, 0, 1, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 2, 0}, {0, 0, 0, 2, 0, 1, 2, 0}};
         for (Engine engine : {Engine::ProjectAndLift, Engine::Completion}) {
           const auto s = solve_system(LinearSystem{a, IntVector{2, 0}, {}}, engine);
           check(oracle::to_set(s.inhomogeneous) == inhom, "inhomogeneous solutions differ from zinhom");
           check(oracle::to_set(s.homogeneous) == hom, "homogeneous solutions differ from zhom");
         }
       }},
      {7, "omega-primality", 0,
       [&](Check& check) {
         check(omega(square, IntVector{2, 0}) == 2, "omega((2,0)) != 2");
         check(omega(square).value == 4, "omega(M) != 4");
         auto timed = [&](const std::string& what, double limit, const std::function<bool()>& fn) {
           const auto start = std::chrono::steady_clock::now();
           check(fn(), what);
           const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
           check(s < limit, what + " took too long");
         };
         timed("omega(<10,17,24,31,43>) != 11", 10, [&] { return omega(big.affine()).value == 11; });
         timed("omega(<201,223,357>) != 75 on the general path", 300,
               [&] { return omega(NumericalSemigroup({201, 223, 357}).affine()).value == 75; });
       }},
      {8, "catenary family of <10,17,24,31,43>", 60.0,
       [&](Check& check) {
         check(catenary(big.affine()).value == 6, "plain catenary (Betti path) != 6");
         check(catenary(big).value == 6, "plain catenary (Apery path) != 6");
         check(equal_catenary(big.affine()).value == 11, "equal catenary != 11");
         check(homogeneous_catenary(big.affine()).value == 11, "homogeneous catenary != 11");
         check(monotone_catenary(big.affine()).value == 11, "monotone catenary != 11");
       }},
      {9, "block monoids", 60.0,
       [&](Check& check) {
         const auto z22 = nonzero_group_elements({2, 2});
         check(oracle::to_set(block_monoid({2, 2}, z22).generators()) ==
                   std::set<Vec>{{0, 0, 2}, {0, 2, 0}, {1, 1, 1}, {2, 0, 0}},
               "generators of B(Z_2^2)");
         check(davenport_constant({2, 2}, z22) == 3, "D(Z_2^2) != 3");
         const auto b = fixtures::block_z2_cubed();
         check(elasticity(b).value == 2, "elasticity of B(Z_2^3) != 2");
         check(tame(b).value == 4, "tame degree of B(Z_2^3) != 4");
       }},
      {10, "Delta set of <701,902,1041>", 60.0,
       [&](Check& check) {
         const NumericalSemigroup s({701, 902, 1041});
         const auto d = delta_set(s, 313436, 313436);
         check(d.values == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 11, 17}, "scanned Delta set");
         check(d.complete, "scan not marked complete");
         std::int64_t g = 0;
         for (auto v : d.values) g = std::gcd(g, v);
         check(delta_min(s.affine()) == Integer(g) && g == d.values.front(), "min Delta != gcd");
         check(delta_max(s.affine())->value == d.values.back(), "Betti max != scanned max");
       }},
      {11, "denumerants of <3,5,7> (all 98 printed values)", 0,
       [&](Check& check) {
         const NumericalSemigroup s({3, 5, 7});
         check(max_denumerant(s).value == 2, "max denumerant != 2");
         const std::vector<int> printed{
             1,  1,  1,  1,  1,  1,  1,  2,  1,  2,  2,  2,  3,  2,  3,  3,  3,  4,  4,  4,  4,  5,  5,  5,  6,
             6,  6,  7,  7,  7,  8,  8,  9,  9,  9,  10, 10, 11, 11, 12, 12, 12, 14, 13, 14, 15, 15, 16, 16, 17,
             17, 18, 19, 19, 20, 20, 21, 22, 22, 23, 24, 24, 25, 26, 26, 27, 28, 29, 29, 30, 31, 31, 33, 33, 34,
             35, 35, 37, 37, 38, 39, 40, 41, 41, 43, 43, 44, 46, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55};
         std::vector<int> got;
         for (std::int64_t m = 0; got.size() < printed.size(); ++m)
           if (s.contains(m)) got.push_back(static_cast<int>(denumerant(s.affine(), num(m))));
         check(got == printed, "denumerant sequence differs from the printed list");
       }},
      {12, "property suites", 0,
       [&](Check& check) {
         // Kernel outputs against box enumeration.
         std::mt19937 rng(20240611);
         std::uniform_int_distribution<int> entry(-3, 3);
         int mismatches = 0;
         for (int trial = 0; trial < 200; ++trial) {
           const std::size_t rows = 1 + trial % 3;
           const std::size_t n = std::min<std::size_t>(5, rows + 1 + (trial / 3) % 3);
           Mat a(rows, Vec(n));
           for (auto& r : a)
             for (auto& e : r) e = entry(rng);
           const IntMatrix m = oracle::to_im(a);
           std::int64_t hb = 1, gb = 1;
           while (std::pow(hb + 3, n) <= 2e5) ++hb;
           while (std::pow(2 * gb + 5, n) <= 2e5) ++gb;
           mismatches += inside(oracle::to_set(hilbert_basis(m)), hb) != oracle::hilbert_box(a, n, {}, hb);
           mismatches += inside(oracle::to_set(graver_basis(m)), gb) != oracle::graver_box(a, n, gb);
         }
         check(mismatches == 0, std::to_string(mismatches) + " Hilbert/Graver mismatches against the box");

         // Bottleneck tree against bridge removal and a threshold oracle.
         int fibers = 0, disagreements = 0;
         std::mt19937 frng(23);
         while (fibers < 100) {
           const NumericalSemigroup s = fixtures::random_numerical(frng, 30);
           const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 200)(frng);
           const auto z = oracle::factorizations(Vec(s.generators().begin(), s.generators().end()), m);
           if (z.empty() || z.size() > 80) continue;
           ++fibers;
           const Integer mst = catenary_of_factorizations(s.affine(), to_fiber(z));
           disagreements += mst != catenary_by_bridge_removal(s.affine(), to_fiber(z)) || mst != threshold_catenary(z);
         }
         check(disagreements == 0, std::to_string(disagreements) + " fibers where MST and bridge removal disagree");

         // Fast numerical paths against the general ones; incomparability
         // of fibers and uniqueness of Apery decompositions on the same
         // instances.
         std::mt19937 nrng(37);
         int path_mismatch = 0, comparable = 0, apery_bad = 0;
         for (int trial = 0; trial < 25; ++trial) {
           const NumericalSemigroup s = fixtures::random_numerical(nrng, 50);
           path_mismatch += catenary(s).value != catenary(s.affine()).value;
           path_mismatch += tame(s).value != tame(s.affine()).value;
           path_mismatch += omega(s).value != omega(s.affine()).value;
           for (std::int64_t m = 0; m <= 3 * s.generators().back(); ++m) {
             const auto z = s.factorizations(m);
             for (std::size_t i = 0; i < z.size(); ++i)
               for (std::size_t j = 0; j < z.size(); ++j) comparable += i != j && z[i].leq(z[j]);
             if (!s.contains(m)) continue;
             for (const auto n : s.generators()) {
               int ways = 0;
               for (const auto w : apery_set(s, n)) ways += w <= m && (m - w) % n == 0;
               apery_bad += ways != 1;
             }
           }
         }
         check(path_mismatch == 0, std::to_string(path_mismatch) + " fast/general path mismatches");
         check(comparable == 0, std::to_string(comparable) + " comparable factorization pairs");
         check(apery_bad == 0, std::to_string(apery_bad) + " elements without a unique Apery decomposition");
       }},
  };

  const int failed = run_all(criteria);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
