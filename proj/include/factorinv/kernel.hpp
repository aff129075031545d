#pragma once

#include "factorinv/integer.hpp"

#include <optional>
#include <vector>

namespace factorinv {

/// A x = b over the nonnegative integers. A row with a modulus d is the
/// congruence row . x == b_i (mod d); rows without one are equations over Z.
struct LinearSystem {
  IntMatrix matrix;
  IntVector rhs;
  /// Either empty (no congruences) or one entry per row.
  std::vector<std::optional<Integer>> moduli;

  static LinearSystem homogeneous(IntMatrix matrix, std::vector<std::optional<Integer>> moduli = {});

  std::size_t unknowns() const noexcept { return matrix.cols(); }
  bool has_congruences() const noexcept;

  /// Throws MalformedSystem when dimensions disagree or a modulus is below 2.
  void validate() const;

  /// Exact check of one candidate against every row.
  bool is_solution(const IntVector& x) const;
};

/// All nonnegative solutions of A x = b are u + sum c_i h_i with u taken from
/// `inhomogeneous` and h_i from `homogeneous`. Both lists are sorted and
/// pairwise incomparable.
struct SolutionSet {
  std::vector<IntVector> inhomogeneous;
  std::vector<IntVector> homogeneous;
};

/// Completion engines. Both return the same sets; ProjectAndLift works on
/// the integer kernel lattice and copes with large coefficients, Completion
/// is the Contejean-Devie search over N^n.
enum class Engine { ProjectAndLift, Completion };

SolutionSet solve_system(const LinearSystem& system, Engine engine = Engine::ProjectAndLift);

/// Every nonnegative solution, for systems whose homogeneous part is
/// trivial. Throws InfiniteFiber otherwise.
std::vector<IntVector> enumerate_bounded(const LinearSystem& system);

/// Whether some x >= 0 solves the system; stops at the first solution when
/// the fiber is a finite box.
bool has_nonnegative_solution(const LinearSystem& system);

/// Minimal generating set of the monoid of nonnegative solutions of A x = 0
/// (rows with a modulus taken as congruences).
std::vector<IntVector> hilbert_basis(const IntMatrix& matrix, const std::vector<std::optional<Integer>>& moduli = {},
                                     Engine engine = Engine::ProjectAndLift);

/// The conformal order: x is below y when every coordinate agrees in sign
/// and is no larger in absolute value.
bool conformal_leq(const IntVector& x, const IntVector& y);

/// Conformally minimal nonzero integer kernel vectors, one per sign pair
/// (first nonzero entry positive), sorted.
std::vector<IntVector> graver_basis(const IntMatrix& matrix, Engine engine = Engine::ProjectAndLift);

/// Conformally minimal u in Z^n with A u = b, sorted. For b = 0 this is
/// just the zero vector.
std::vector<IntVector> conformal_minimal_solutions(const IntMatrix& matrix, const IntVector& rhs);

/// Primitive kernel vectors of minimal support, one per sign pair, sorted.
std::vector<IntVector> circuits(const IntMatrix& matrix);

/// Rank over Q.
std::size_t rank(const IntMatrix& matrix);

}  // namespace factorinv
