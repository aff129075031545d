#include "factorinv/kernel.hpp"

#include "completion.hpp"
#include "lifting.hpp"
#include "factorinv/errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <set>

namespace factorinv {

using detail::Coords;

LinearSystem LinearSystem::homogeneous(IntMatrix matrix, std::vector<std::optional<Integer>> moduli) {
  LinearSystem s;
  s.rhs = IntVector(matrix.rows());
  s.matrix = std::move(matrix);
  s.moduli = std::move(moduli);
  return s;
}

bool LinearSystem::has_congruences() const noexcept {
  return std::any_of(moduli.begin(), moduli.end(), [](const auto& m) { return m.has_value(); });
}

void LinearSystem::validate() const {
  if (rhs.size() != matrix.rows())
    throw MalformedSystem("right-hand side has " + std::to_string(rhs.size()) + " entries for " +
                          std::to_string(matrix.rows()) + " rows");
  if (!moduli.empty() && moduli.size() != matrix.rows())
    throw MalformedSystem("moduli list has " + std::to_string(moduli.size()) + " entries for " +
                          std::to_string(matrix.rows()) + " rows");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] && *moduli[i] < 2)
      throw MalformedSystem("modulus of row " + std::to_string(i) + " must be at least 2");
}

bool LinearSystem::is_solution(const IntVector& x) const {
  if (x.size() != unknowns() || !x.is_nonnegative()) return false;
  const IntVector ax = matrix.apply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const Integer diff = ax[i] - rhs[i];
    const bool modular = !moduli.empty() && moduli[i].has_value();
    if (modular ? (diff % *moduli[i]) != 0 : diff != 0) return false;
  }
  return true;
}

namespace {

Integer mod_floor(const Integer& a, const Integer& d) {
  Integer r = a % d;
  if (r < 0) r += d;
  return r;
}

/// One nonnegative auxiliary unknown per congruence row: with entries and
/// right-hand side reduced into [0, d), row . x - b == d z forces z >= 0.
struct Lifted {
  IntMatrix matrix;
  IntVector rhs;
};

Lifted eliminate_congruences(const LinearSystem& sys) {
  const std::size_t rows = sys.matrix.rows();
  const std::size_t n = sys.matrix.cols();
  std::vector<std::size_t> modular_rows;
  for (std::size_t i = 0; i < sys.moduli.size(); ++i)
    if (sys.moduli[i]) modular_rows.push_back(i);
  Lifted out{IntMatrix(rows, n + modular_rows.size()), sys.rhs};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = sys.matrix(i, j);
  for (std::size_t k = 0; k < modular_rows.size(); ++k) {
    const std::size_t i = modular_rows[k];
    const Integer& d = *sys.moduli[i];
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = mod_floor(sys.matrix(i, j), d);
    out.rhs[i] = mod_floor(sys.rhs[i], d);
    out.matrix(i, n + k) = -d;
  }
  return out;
}

template <class S>
class NonnegativeEnumerator {
 public:
  NonnegativeEnumerator(const IntMatrix& a, const IntVector& b, bool first_only = false)
      : rows_(a.rows()), cols_(a.cols()), first_only_(first_only) {
    cols_data_.resize(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) cols_data_[j * rows_ + i] = detail::from_integer<S>(a(i, j));
    // suffix_gcd_[j * rows_ + i] = gcd of row i over columns j..n-1 (0 when all zero).
    suffix_gcd_.assign((cols_ + 1) * rows_, S(0));
    for (std::size_t j = cols_; j-- > 0;)
      for (std::size_t i = 0; i < rows_; ++i)
        suffix_gcd_[j * rows_ + i] = detail::scalar_gcd(suffix_gcd_[(j + 1) * rows_ + i], cols_data_[j * rows_ + i]);
    rhs_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rhs_[i] = detail::from_integer<S>(b[i]);
  }

  std::vector<Coords> run() {
    for (const auto& v : rhs_)
      if (v < S(0)) return {};
    if (!feasible(rhs_, 0)) return {};
    Coords x(cols_, 0);
    std::vector<S> r = rhs_;
    recurse(0, x, r);
    return std::move(out_);
  }

 private:
  bool feasible(const std::vector<S>& r, std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      const S& g = suffix_gcd_[j * rows_ + i];
      if (g == S(0)) {
        if (r[i] != S(0)) return false;
      } else if (r[i] % g != S(0)) {
        return false;
      }
    }
    return true;
  }

  void recurse(std::size_t j, Coords& x, std::vector<S>& r) {
    if (j == cols_) {
      out_.push_back(x);
      return;
    }
    const S* a = cols_data_.data() + j * rows_;
    bool bounded = false;
    S max_count(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i] > S(0)) {
        const S q = r[i] / a[i];
        if (!bounded || q < max_count) max_count = q;
        bounded = true;
      }
    }
    const std::int64_t limit = detail::to_int64(max_count);
    std::vector<S> rr = r;
    for (std::int64_t c = 0; c <= limit; ++c) {
      if (first_only_ && !out_.empty()) break;
      if (c > 0)
        for (std::size_t i = 0; i < rows_; ++i) rr[i] -= a[i];
      if (feasible(rr, j + 1)) {
        x[j] = c;
        recurse(j + 1, x, rr);
      }
    }
    x[j] = 0;
  }

  std::size_t rows_;
  std::size_t cols_;
  bool first_only_;
  std::vector<S> cols_data_;
  std::vector<S> suffix_gcd_;
  std::vector<S> rhs_;
  std::vector<Coords> out_;
};

}  // namespace

namespace {

std::vector<IntVector> project(const std::vector<IntVector>& vs, std::size_t n) {
  std::vector<IntVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.head(n));
  return out;
}

SolutionSet solve_by_lifting(const Lifted& lifted) {
  const std::size_t n = lifted.matrix.cols();
  SolutionSet out;
  if (lifted.rhs.is_zero()) {
    out.homogeneous = detail::lattice_minimal_vectors(lifted.matrix, std::vector<detail::CoordinateRule>(n),
                                                      [&] {
                                                        std::vector<std::size_t> order(n);
                                                        for (std::size_t i = 0; i < n; ++i) order[i] = i;
                                                        return order;
                                                      }());
    // The zero vector is the only minimal solution of a homogeneous system.
    out.inhomogeneous.push_back(IntVector(n));
    return out;
  }
  // (x, t) with A x - t b = 0 and 0 <= t <= 1; t is lifted first so the
  // bound prunes from the start.
  IntMatrix extended(lifted.matrix.rows(), n + 1);
  for (std::size_t i = 0; i < lifted.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) extended(i, j) = lifted.matrix(i, j);
    extended(i, n) = -lifted.rhs[i];
  }
  std::vector<detail::CoordinateRule> rules(n + 1);
  rules[n].upper = 1;
  std::vector<std::size_t> order{n};
  for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  for (auto& v : detail::lattice_minimal_vectors(extended, rules, order)) {
    const bool inhom = v[n] == 1;
    (inhom ? out.inhomogeneous : out.homogeneous).push_back(v.head(n));
  }
  return out;
}

SolutionSet solve_by_completion(const Lifted& lifted) {
  const auto hom = detail::homogeneous_completion(lifted.matrix);
  const auto inhom = detail::inhomogeneous_completion(lifted.matrix, lifted.rhs, hom);
  SolutionSet out;
  for (const auto& c : hom) out.homogeneous.push_back(detail::to_int_vector(c));
  for (const auto& c : inhom) out.inhomogeneous.push_back(detail::to_int_vector(c));
  return out;
}

}  // namespace

SolutionSet solve_system(const LinearSystem& system, Engine engine) {
  system.validate();
  const std::size_t n = system.unknowns();
  const Lifted lifted = eliminate_congruences(system);
  const SolutionSet raw = engine == Engine::ProjectAndLift ? solve_by_lifting(lifted) : solve_by_completion(lifted);
  SolutionSet out;
  out.inhomogeneous = minimal_elements(project(raw.inhomogeneous, n));
  auto h = project(raw.homogeneous, n);
  std::erase_if(h, [](const IntVector& v) { return v.is_zero(); });
  out.homogeneous = minimal_elements(std::move(h));
  return out;
}

namespace {

// Nonnegative matrix without congruences and without zero columns: the
// fiber is a finite box and a depth-first search enumerates it.
bool box_searchable(const LinearSystem& system) {
  const IntMatrix& a = system.matrix;
  if (system.has_congruences()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) < 0) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.column(j).is_zero())
      throw InfiniteFiber("column " + std::to_string(j) + " is zero, so the solution set is infinite");
  return true;
}

std::vector<IntVector> search_box(const LinearSystem& system, bool first_only) {
  auto found = detail::with_exact_scalars<std::vector<Coords>>(
      [&]<class S>() { return NonnegativeEnumerator<S>(system.matrix, system.rhs, first_only).run(); });
  std::vector<IntVector> out;
  for (const auto& c : found) out.push_back(detail::to_int_vector(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntVector> enumerate_bounded(const LinearSystem& system) {
  system.validate();
  if (box_searchable(system)) return search_box(system, false);
  SolutionSet sols = solve_system(system);
  if (!sols.homogeneous.empty())
    throw InfiniteFiber("the homogeneous system has the nonzero solution " + to_string(sols.homogeneous.front()));
  return sols.inhomogeneous;
}

bool has_nonnegative_solution(const LinearSystem& system) {
  system.validate();
  if (box_searchable(system)) return !search_box(system, true).empty();
  return !solve_system(system).inhomogeneous.empty();
}

std::vector<IntVector> hilbert_basis(const IntMatrix& matrix, const std::vector<std::optional<Integer>>& moduli,
                                     Engine engine) {
  return solve_system(LinearSystem::homogeneous(matrix, moduli), engine).homogeneous;
}

bool conformal_leq(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) throw MalformedSystem("conformal comparison between vectors of different length");
  return x.positive_part().leq(y.positive_part()) && x.negative_part().leq(y.negative_part());
}

std::vector<IntVector> conformal_minimal_solutions(const IntMatrix& matrix, const IntVector& rhs) {
  LinearSystem{matrix, rhs, {}}.validate();
  const std::size_t n = matrix.cols();
  // (u, t) with A u - t b = 0, u free and 0 <= t <= 1. A t = 0 vector below
  // a t = 1 vector v would leave another t = 1 vector below v, so the
  // t = 1 part of the conformal minima is exactly the minimal coset.
  IntMatrix extended(matrix.rows(), n + 1);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) extended(i, j) = matrix(i, j);
    extended(i, n) = -rhs[i];
  }
  std::vector<detail::CoordinateRule> rules(n + 1, {false, {}});
  rules[n] = {true, 1};
  std::vector<std::size_t> order{n};
  for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  std::vector<IntVector> out;
  for (const auto& v : detail::lattice_minimal_vectors(extended, rules, order))
    if (v[n] == 1) out.push_back(v.head(n));
  sort_unique(out);
  return out;
}

std::vector<IntVector> graver_basis(const IntMatrix& matrix, Engine engine) {
  const std::size_t n = matrix.cols();
  if (engine == Engine::ProjectAndLift) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto all = detail::lattice_minimal_vectors(matrix, std::vector<detail::CoordinateRule>(n, {false, {}}), order);
    std::vector<IntVector> out;
    for (auto& v : all) {
      const auto first = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
      if (first != v.end() && *first > 0) out.push_back(std::move(v));
    }
    sort_unique(out);
    return out;
  }
  // Lawrence-type lifting: (x, y) minimal with A x = A y, minus the (e_i, e_i).
  const auto lifted = hilbert_basis(matrix.hconcat(matrix.negated()), {}, engine);
  std::vector<IntVector> out;
  for (const auto& c : lifted) {
    IntVector v(n);
    bool diagonal = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] > 0 && c[n + i] > 0) diagonal = true;
      v[i] = c[i] - c[n + i];
    }
    if (diagonal) continue;
    const auto first = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
    if (first != v.end() && *first > 0) out.push_back(std::move(v));
  }
  sort_unique(out);
  return out;
}

namespace {

/// Nonzero rows of a fraction-free echelon form; same row space as the input.
std::vector<IntVector> echelon_rows(const IntMatrix& m) {
  std::vector<IntVector> rows = m.row_list();
  std::vector<IntVector> out;
  const std::size_t n = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    const IntVector& piv = rows[pivot_row];
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Integer f = rows[r][c];
      IntVector nr(n);
      for (std::size_t k = 0; k < n; ++k) nr[k] = rows[r][k] * piv[c] - piv[k] * f;
      const Integer g = content(nr);
      if (g > 1)
        for (auto& e : nr) e /= g;
      rows[r] = std::move(nr);
    }
    out.push_back(piv);
    ++pivot_row;
  }
  return out;
}

template <class S>
S bareiss_det(std::vector<S> a, std::size_t k) {
  if (k == 0) return S(1);
  S sign(1);
  S prev(1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i * k + i] == S(0)) {
      std::size_t p = i + 1;
      while (p < k && a[p * k + i] == S(0)) ++p;
      if (p == k) return S(0);
      for (std::size_t c = 0; c < k; ++c) std::swap(a[i * k + c], a[p * k + c]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c)
        a[r * k + c] = (a[r * k + c] * a[i * k + i] - a[r * k + i] * a[i * k + c]) / prev;
      a[r * k + i] = S(0);
    }
    prev = a[i * k + i];
  }
  return sign * a[(k - 1) * k + (k - 1)];
}

template <class S>
std::vector<IntVector> circuits_from_echelon(const std::vector<IntVector>& rows, std::size_t n) {
  const std::size_t r = rows.size();
  std::vector<S> m(r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = detail::from_integer<S>(rows[i][j]);
  std::set<IntVector> found;
  if (r + 1 > n) return {};
  std::vector<std::size_t> subset(r + 1);
  for (std::size_t i = 0; i <= r; ++i) subset[i] = i;
  std::vector<S> minor(r * r);
  while (true) {
    IntVector v(n);
    bool nonzero = false;
    for (std::size_t drop = 0; drop <= r; ++drop) {
      std::size_t cc = 0;
      for (std::size_t t = 0; t <= r; ++t) {
        if (t == drop) continue;
        for (std::size_t i = 0; i < r; ++i) minor[i * r + cc] = m[i * n + subset[t]];
        ++cc;
      }
      S d = bareiss_det<S>(minor, r);
      if (drop % 2 == 1) d = -d;
      if (d != S(0)) nonzero = true;
      v[subset[drop]] = detail::to_integer(d);
    }
    if (nonzero) found.insert(normalize_up_to_sign(v));
    // next combination
    std::size_t i = r + 1;
    while (i > 0 && subset[i - 1] == n - (r + 1) + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t k = i; k <= r; ++k) subset[k] = subset[k - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::size_t rank(const IntMatrix& matrix) { return echelon_rows(matrix).size(); }

std::vector<IntVector> circuits(const IntMatrix& matrix) {
  const auto rows = echelon_rows(matrix);
  const std::size_t n = matrix.cols();
  return detail::with_exact_scalars<std::vector<IntVector>>(
      [&]<class S>() { return circuits_from_echelon<S>(rows, n); });
}

}  // namespace factorinv
