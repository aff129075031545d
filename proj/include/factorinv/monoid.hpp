#pragma once

#include "factorinv/integer.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace factorinv {

/// Exponent vector over an ordered atom list.
using Factorization = IntVector;

/// Two factorizations of the same element.
struct PresentationPair {
  Factorization lhs;
  Factorization rhs;
  friend bool operator==(const PresentationPair&, const PresentationPair&) = default;
  friend auto operator<=>(const PresentationPair&, const PresentationPair&) = default;
};

/// Finitely generated submonoid of N^k, given by generators or as the full
/// monoid of nonnegative solutions of a system (rows with a modulus are
/// congruences). Immutable; derived data is computed once and shared by
/// copies.
class AffineSemigroup {
 public:
  struct Equations {
    IntMatrix matrix;
    std::vector<std::optional<Integer>> moduli;
  };

  /// Drops duplicates and generators that lie in the monoid spanned by the
  /// others, keeping input order otherwise. Throws InvalidArgument for zero
  /// or negative generators, mixed dimensions or an empty list.
  static AffineSemigroup from_generators(std::vector<IntVector> generators);

  /// Atoms are the Hilbert basis, sorted lexicographically. Throws
  /// MalformedSystem for bad moduli and InvalidArgument when the only
  /// solution is zero.
  static AffineSemigroup from_equations(IntMatrix matrix, std::vector<std::optional<Integer>> moduli);

  std::size_t dimension() const noexcept;
  std::size_t embedding_dimension() const noexcept;
  const std::vector<IntVector>& generators() const noexcept;
  const IntVector& generator(std::size_t i) const;
  /// Generators as columns.
  const IntMatrix& generator_matrix() const noexcept;

  /// Defined by equations, hence full: M = group(M) cap N^k.
  bool is_full() const noexcept;
  const std::optional<Equations>& equations() const noexcept;

  /// phi(x) = sum x_i m_i.
  IntVector evaluate(const Factorization& x) const;

  /// Z(m); empty when m is not in the monoid. Sorted lexicographically.
  std::vector<Factorization> factorizations(const IntVector& m) const;
  bool contains(const IntVector& m) const;

  /// Graver basis of the generator matrix (cached).
  const std::vector<IntVector>& graver() const;

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.generators() == b.generators() && a.is_full() == b.is_full();
  }

 private:
  struct State;
  explicit AffineSemigroup(std::shared_ptr<const State> state);
  void require_element_size(const IntVector& m) const;

  std::shared_ptr<const State> state_;
};

/// Numerical semigroup with sorted minimal generators m_1 < ... < m_e.
/// Ap(S, m_1) is computed once at construction.
class NumericalSemigroup {
 public:
  /// Removes redundant generators. Throws InvalidArgument when a generator
  /// is not positive or when the gcd is not 1.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  std::int64_t multiplicity() const noexcept { return generators_.front(); }

  bool contains(std::int64_t s) const;
  std::int64_t frobenius_number() const;

  /// Ap(S, m_1) indexed by residue modulo m_1.
  const std::vector<std::int64_t>& apery_by_residue() const noexcept { return apery_; }

  /// The same monoid as an affine semigroup in N^1.
  const AffineSemigroup& affine() const noexcept { return affine_; }

  std::vector<Factorization> factorizations(std::int64_t s) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> apery_;
  AffineSemigroup affine_;
};

/// Ap(S, n) sorted ascending; exactly n elements. Throws InvalidElement when
/// n is not a positive element of S.
std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t n);

/// The graph on Z(m) joining factorizations with nonzero dot product.
struct NablaGraph {
  std::vector<Factorization> vertices;
  std::vector<std::vector<std::size_t>> adjacency;
  /// Connected components (R-classes) as vertex indices; each component is
  /// sorted, components are ordered by their first vertex.
  std::vector<std::vector<std::size_t>> components;
};

NablaGraph nabla_graph(const AffineSemigroup& m, const IntVector& element);

/// R-classes of Z(m) as sorted factorization lists, ordered by their
/// lexicographically smallest member.
std::vector<std::vector<Factorization>> r_classes(const AffineSemigroup& m, const IntVector& element);

/// Betti elements from the Graver candidates phi(x+), sorted.
std::vector<IntVector> betti_elements(const AffineSemigroup& m);
/// Numerical path: candidates m_i + w, i >= 2, w in Ap(S, m_1) \ {0}.
std::vector<std::int64_t> betti_elements(const NumericalSemigroup& s);

/// One pair per extra R-class of each Betti element: the lexicographically
/// smallest factorization of the class holding the overall minimum is paired
/// with the smallest factorization of every other class. Sorted by Betti
/// element, then by pair.
std::vector<PresentationPair> minimal_presentation(const AffineSemigroup& m);

/// I(M): (x+, x-) for x = +-g over the Graver basis, and (e_i, e_i). Sorted.
std::vector<PresentationPair> lawrence_pairs(const AffineSemigroup& m);

/// {phi(x+) : x in Graver} together with the atoms, sorted.
std::vector<IntVector> primitive_elements(const AffineSemigroup& m);

enum class IdealPath {
  /// Full when the monoid is defined by equations, otherwise General.
  Automatic,
  /// Inhomogeneous minimal solutions of phi(x) = m + phi(y), projected to x.
  General,
  /// Minimal solutions of A x >= m; valid only for full monoids.
  Full,
};

/// Minimals of Z(m + M) under the componentwise order, sorted. m must lie
/// in the group generated by M (Full requires is_full()).
std::vector<Factorization> principal_ideal_minimal_factorizations(const AffineSemigroup& m, const IntVector& element,
                                                                  IdealPath path = IdealPath::Automatic);

/// Block monoid B({g_1, ..., g_k}) over Z_{d_1} x ... x Z_{d_r}: zero-sum
/// sequences as the full monoid of solutions of (g_1 | ... | g_k) x == 0.
/// Throws InvalidGroup for a modulus below 2 or an entry outside [0, d_i).
AffineSemigroup block_monoid(const std::vector<Integer>& moduli, const std::vector<IntVector>& elements);

/// Largest length of a minimal zero-sum sequence.
Integer davenport_constant(const std::vector<Integer>& moduli, const std::vector<IntVector>& elements);

/// All nonzero elements of Z_{d_1} x ... x Z_{d_r}, in mixed-radix order.
std::vector<IntVector> nonzero_group_elements(const std::vector<Integer>& moduli);

/// <(m_i, 1)> and <(m_i, 1), (0, 1)>.
AffineSemigroup eq_lift(const AffineSemigroup& m);
AffineSemigroup hom_lift(const AffineSemigroup& m);

std::string to_string(const PresentationPair& p);

}  // namespace factorinv
