#include "common.hpp"
#include "factorinv/kernel.hpp"

#include <numeric>
#include <set>

namespace factorinv {

using detail::require_fiber;

Integer distance(const Factorization& x, const Factorization& y) {
  if (x.size() != y.size())
    throw MalformedSystem("factorizations " + to_string(x) + " and " + to_string(y) + " have different sizes");
  return std::max(x.total(), y.total()) - x.meet(y).total();
}

LengthSet length_set(const AffineSemigroup& m, const IntVector& element) {
  LengthSet out;
  for (const auto& x : require_fiber(m, element)) out.lengths.push_back(x.total());
  std::sort(out.lengths.begin(), out.lengths.end());
  out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()), out.lengths.end());
  return out;
}

namespace {

using Lengths = std::vector<std::int64_t>;

// Calls visit(n, L(n)) for n = 0..bound, keeping only the last m_e sets.
template <class Visit>
void scan_lengths(const NumericalSemigroup& s, std::int64_t bound, Visit&& visit) {
  const auto& gens = s.generators();
  const std::size_t window = static_cast<std::size_t>(gens.back()) + 1;
  std::vector<Lengths> ring(window);
  Lengths merged, scratch;
  for (std::int64_t n = 0; n <= bound; ++n) {
    merged.clear();
    if (n == 0) merged.push_back(0);
    for (const auto g : gens) {
      if (g > n) break;
      const Lengths& prev = ring[static_cast<std::size_t>((n - g) % static_cast<std::int64_t>(window))];
      if (prev.empty()) continue;
      scratch.clear();
      auto p = prev.begin();
      auto q = merged.begin();
      while (p != prev.end() || q != merged.end()) {
        if (q == merged.end() || (p != prev.end() && *p + 1 < *q)) {
          scratch.push_back(*p++ + 1);
        } else if (p == prev.end() || *q < *p + 1) {
          scratch.push_back(*q++);
        } else {
          scratch.push_back(*q++);
          ++p;
        }
      }
      merged.swap(scratch);
    }
    visit(n, merged);
    ring[static_cast<std::size_t>(n % static_cast<std::int64_t>(window))] = merged;
  }
}

}  // namespace

LengthSet length_set(const NumericalSemigroup& s, std::int64_t element) {
  if (!s.contains(element)) throw InvalidElement(std::to_string(element) + " is not in the semigroup");
  LengthSet out;
  scan_lengths(s, element, [&](std::int64_t n, const Lengths& l) {
    if (n == element)
      for (const auto v : l) out.lengths.push_back(Integer(v));
  });
  return out;
}

Rational elasticity(const AffineSemigroup& m, const IntVector& element) {
  if (element.is_zero()) throw InvalidArgument("the elasticity of 0 is not defined");
  const LengthSet l = length_set(m, element);
  return Rational(l.lengths.back(), l.lengths.front());
}

Maximum<Rational> elasticity(const AffineSemigroup& m) {
  Maximum<Rational> best{Rational(1), std::nullopt};
  for (const auto& c : circuits(m.generator_matrix())) {
    const Integer a = c.positive_part().total();
    const Integer b = c.negative_part().total();
    const Rational r = a >= b ? Rational(a, b) : Rational(b, a);
    if (!best.at || r > best.value) best = {r, c};
  }
  return best;
}

bool is_half_factorial(const AffineSemigroup& m) {
  for (const auto& p : minimal_presentation(m))
    if (p.lhs.total() != p.rhs.total()) return false;
  return true;
}

namespace {

std::vector<Integer> gaps(const std::vector<Integer>& lengths) {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < lengths.size(); ++i) out.push_back(lengths[i] - lengths[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Integer> delta(const AffineSemigroup& m, const IntVector& element) {
  return gaps(length_set(m, element).lengths);
}

std::optional<Integer> delta_min(const AffineSemigroup& m) {
  Integer g = 0;
  for (const auto& p : minimal_presentation(m)) g = gcd(g, abs(p.lhs.total() - p.rhs.total()));
  if (g == 0) return std::nullopt;
  return g;
}

std::optional<Maximum<Integer>> delta_max(const AffineSemigroup& m) {
  Maximum<Integer> best;
  for (const auto& b : betti_elements(m)) {
    const auto d = delta(m, b);
    if (!d.empty() && (!best.at || d.back() > best.value)) best = {d.back(), b};
  }
  if (!best.at) return std::nullopt;
  return best;
}

DeltaScan delta_set(const NumericalSemigroup& s, std::int64_t scan_bound, std::optional<std::int64_t> periodicity_bound) {
  if (scan_bound <= 0) throw InvalidArgument("the scan bound must be positive");
  if (periodicity_bound && *periodicity_bound < 0) throw InvalidArgument("the periodicity bound must be nonnegative");
  std::set<std::int64_t> found;
  scan_lengths(s, scan_bound, [&](std::int64_t, const Lengths& l) {
    for (std::size_t i = 1; i < l.size(); ++i) found.insert(l[i] - l[i - 1]);
  });
  DeltaScan out;
  out.values.assign(found.begin(), found.end());
  out.scan_bound = scan_bound;
  out.periodicity_bound = periodicity_bound;
  out.complete = periodicity_bound && scan_bound >= *periodicity_bound;
  return out;
}

Integer denumerant(const AffineSemigroup& m, const IntVector& element) {
  return Integer(require_fiber(m, element).size());
}

Integer max_denumerant(const AffineSemigroup& m, const IntVector& element) {
  const auto z = require_fiber(m, element);
  Integer longest = 0;
  for (const auto& x : z) longest = std::max(longest, x.total());
  Integer count = 0;
  for (const auto& x : z) count += x.total() == longest;
  return count;
}

MaxDenumerantScan max_denumerant(const NumericalSemigroup& s, std::optional<std::int64_t> scan_bound) {
  MaxDenumerantScan out;
  out.default_bound = !scan_bound;
  out.scan_bound = scan_bound ? *scan_bound
                              : s.frobenius_number() + 1 + s.multiplicity() * s.generators().back();
  if (out.scan_bound <= 0) throw InvalidArgument("the scan bound must be positive");
  // Coin-change over the generators in order, tracking for every n the
  // largest length and how many factorizations reach it.
  const std::size_t size = static_cast<std::size_t>(out.scan_bound) + 1;
  std::vector<std::int64_t> longest(size, -1);
  std::vector<Integer> count(size);
  longest[0] = 0;
  count[0] = 1;
  for (const auto g : s.generators()) {
    for (std::size_t n = static_cast<std::size_t>(g); n < size; ++n) {
      const std::size_t from = n - static_cast<std::size_t>(g);
      if (longest[from] < 0) continue;
      const std::int64_t l = longest[from] + 1;
      if (l > longest[n]) {
        longest[n] = l;
        count[n] = count[from];
      } else if (l == longest[n]) {
        count[n] += count[from];
      }
    }
  }
  out.value = 0;
  for (std::size_t n = 0; n < size; ++n)
    if (longest[n] >= 0 && count[n] > out.value) {
      out.value = count[n];
      out.at = static_cast<std::int64_t>(n);
    }
  return out;
}

}  // namespace factorinv
