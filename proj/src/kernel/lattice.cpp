#include "lattice.hpp"

#include <utility>

namespace factorinv::detail {

namespace {

struct Bezout {
  Integer g, x, y;
};

// g = x a + y b with g = gcd(a, b) >= 0.
Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows(), n = m.cols();
  // Column j of the working matrix is (top[j], bottom[j]).
  std::vector<IntVector> top(n, IntVector(rows)), bottom(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) top[j][i] = m(i, j);
    bottom[j][j] = 1;
  }
  std::size_t p = 0;
  for (std::size_t i = 0; i < rows && p < n; ++i) {
    for (std::size_t c = p + 1; c < n; ++c) {
      if (top[c][i] == 0) continue;
      if (top[p][i] == 0) {
        std::swap(top[p], top[c]);
        std::swap(bottom[p], bottom[c]);
        continue;
      }
      const Integer a = top[p][i], b = top[c][i];
      const Bezout e = extended_gcd(a, b);
      const Integer u = b / e.g, v = a / e.g;
      IntVector tp = top[p], bp = bottom[p];
      for (std::size_t k = 0; k < rows; ++k) {
        top[p][k] = e.x * tp[k] + e.y * top[c][k];
        top[c][k] = u * tp[k] - v * top[c][k];
      }
      for (std::size_t k = 0; k < n; ++k) {
        bottom[p][k] = e.x * bp[k] + e.y * bottom[c][k];
        bottom[c][k] = u * bp[k] - v * bottom[c][k];
      }
    }
    if (top[p][i] != 0) ++p;
  }
  return {bottom.begin() + static_cast<std::ptrdiff_t>(p), bottom.end()};
}

EchelonBasis hermite_rows(std::vector<IntVector> rows, std::size_t dimension) {
  EchelonBasis out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dimension && r < rows.size(); ++col) {
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][col] == 0) continue;
      if (rows[r][col] == 0) {
        std::swap(rows[r], rows[k]);
        continue;
      }
      const Integer a = rows[r][col], b = rows[k][col];
      const Bezout e = extended_gcd(a, b);
      const Integer u = b / e.g, v = a / e.g;
      IntVector pr = rows[r];
      for (std::size_t c = 0; c < dimension; ++c) {
        rows[r][c] = e.x * pr[c] + e.y * rows[k][c];
        rows[k][c] = u * pr[c] - v * rows[k][c];
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) rows[r] = -rows[r];
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(rows[k][col], rows[r][col]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < dimension; ++c) rows[k][c] -= q * rows[r][c];
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

}  // namespace factorinv::detail
