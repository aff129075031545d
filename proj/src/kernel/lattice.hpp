#pragma once

#include "factorinv/integer.hpp"

#include <vector>

namespace factorinv::detail {

/// Basis of the integer kernel {x in Z^n : M x = 0}, via unimodular column
/// operations on [M; I].
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

/// Lattice basis in row Hermite normal form: strictly increasing pivots,
/// positive pivot entries, entries above a pivot reduced modulo it.
struct EchelonBasis {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
};

EchelonBasis hermite_rows(std::vector<IntVector> rows, std::size_t dimension);

}  // namespace factorinv::detail
