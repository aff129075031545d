#include "lifting.hpp"

namespace factorinv::detail {

std::vector<IntVector> lattice_minimal_vectors(const IntMatrix& matrix, const std::vector<CoordinateRule>& rules,
                                               const std::vector<std::size_t>& order) {
  const std::size_t n = matrix.cols();
  IntMatrix permuted(matrix.rows(), n);
  std::vector<CoordinateRule> permuted_rules(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < matrix.rows(); ++i) permuted(i, p) = matrix(i, order[p]);
    permuted_rules[p] = rules[order[p]];
  }
  const EchelonBasis basis = hermite_rows(integer_kernel_basis(permuted), n);
  auto found = with_exact_scalars<std::vector<IntVector>>([&]<class S>() {
    auto vs = ProjectAndLift<S>(basis, permuted_rules).run();
    std::vector<IntVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
      IntVector x(n);
      for (std::size_t p = 0; p < n; ++p) x[order[p]] = to_integer(v[p]);
      out.push_back(std::move(x));
    }
    return out;
  });
  return found;
}

}  // namespace factorinv::detail
