#include "completion.hpp"

namespace factorinv::detail {

IntVector to_int_vector(const Coords& c) {
  IntVector v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return v;
}

Coords to_coords(const IntVector& v) {
  Coords c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = to_int64(v[i]);
  return c;
}

std::vector<Coords> homogeneous_completion(const IntMatrix& matrix) {
  return with_exact_scalars<std::vector<Coords>>([&]<class S>() { return Completion<S>(matrix).homogeneous(); });
}

std::vector<Coords> inhomogeneous_completion(const IntMatrix& matrix, const IntVector& rhs,
                                             const std::vector<Coords>& hom_basis) {
  return with_exact_scalars<std::vector<Coords>>(
      [&]<class S>() { return Completion<S>(matrix).inhomogeneous(rhs, hom_basis); });
}

}  // namespace factorinv::detail
