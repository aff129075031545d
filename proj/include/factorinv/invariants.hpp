#pragma once

#include "factorinv/integer.hpp"
#include "factorinv/monoid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace factorinv {

/// L(m), sorted ascending.
struct LengthSet {
  std::vector<Integer> lengths;
  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

/// A maximum over a candidate set together with the candidate attaining it
/// (the first one in candidate order). `at` is empty when the candidate set
/// is empty, in which case the value is the neutral one documented per call.
template <class V>
struct Maximum {
  V value{};
  std::optional<IntVector> at;
};

/// max{|x|, |y|} - |x meet y|. Throws MalformedSystem on a size mismatch.
Integer distance(const Factorization& x, const Factorization& y);

/// Throws InvalidElement when m is not in the monoid.
LengthSet length_set(const AffineSemigroup& m, const IntVector& element);
/// Dynamic programming L(s) = union over i of 1 + L(s - m_i).
LengthSet length_set(const NumericalSemigroup& s, std::int64_t element);

/// max L(m) / min L(m). Throws InvalidArgument for m = 0.
Rational elasticity(const AffineSemigroup& m, const IntVector& element);
/// Max of |a|/|b| over circuits (a, b) oriented with |a| >= |b|; 1 without
/// circuits. `at` is the circuit.
Maximum<Rational> elasticity(const AffineSemigroup& m);

/// Every minimal presentation pair has sides of equal length.
bool is_half_factorial(const AffineSemigroup& m);

/// Gaps between consecutive lengths of m.
std::vector<Integer> delta(const AffineSemigroup& m, const IntVector& element);
/// gcd of the length differences over a minimal presentation; empty for
/// half-factorial monoids.
std::optional<Integer> delta_min(const AffineSemigroup& m);
/// Max over Betti elements b of max Delta(b); empty for half-factorial
/// monoids. `at` is the Betti element.
std::optional<Maximum<Integer>> delta_max(const AffineSemigroup& m);

struct DeltaScan {
  std::vector<std::int64_t> values;
  std::int64_t scan_bound = 0;
  std::optional<std::int64_t> periodicity_bound;
  /// The scan reached the caller's periodicity bound, so `values` is Delta(S).
  bool complete = false;
};

/// Union of Delta(s) for s <= scan_bound. The periodicity bound is not
/// computed here; pass it to get the completeness flag.
DeltaScan delta_set(const NumericalSemigroup& s, std::int64_t scan_bound,
                    std::optional<std::int64_t> periodicity_bound = std::nullopt);

/// Least N for which the graph on z with edges of distance <= N is
/// connected, via a minimum bottleneck spanning tree; 0 for one
/// factorization. Throws InvalidFiber when z is empty or the vectors do not
/// factor one element.
Integer catenary_of_factorizations(const AffineSemigroup& m, const std::vector<Factorization>& z);
/// The same value by repeatedly deleting a heaviest non-bridge edge of the
/// complete distance graph until a heaviest edge is a bridge.
Integer catenary_by_bridge_removal(const AffineSemigroup& m, const std::vector<Factorization>& z);

/// c(m) from Z(m). Throws InvalidElement when m is not in the monoid.
Integer catenary(const AffineSemigroup& m, const IntVector& element);
/// Max of c(b) over Betti elements; 0 for free monoids.
Maximum<Integer> catenary(const AffineSemigroup& m);
/// Max of c(m) over m_i + (Ap(S, m_1) \ {0}), i >= 2.
Maximum<Integer> catenary(const NumericalSemigroup& s);

/// Max over lengths l of the catenary degree of Z_l(m).
Integer equal_catenary(const AffineSemigroup& m, const IntVector& element);
/// Max over consecutive lengths of min{d(x, y) : |x| = l_i, |y| = l_{i+1}}.
Integer adjacent_catenary(const AffineSemigroup& m, const IntVector& element);
/// max(equal, adjacent).
Integer monotone_catenary(const AffineSemigroup& m, const IntVector& element);

/// c(eq_lift(M)) and c(hom_lift(M)); `at` lives in the lifted monoid.
Maximum<Integer> equal_catenary(const AffineSemigroup& m);
Maximum<Integer> homogeneous_catenary(const AffineSemigroup& m);
/// Max of the element value over the projections of the primitive elements
/// of hom_lift(M).
Maximum<Integer> monotone_catenary(const AffineSemigroup& m);

/// t(m, m_i): max over z in Z(m) of the distance to the nearest z' in Z(m)
/// using atom i. Throws InvalidArgument unless m is in m_i + M.
Integer tame(const AffineSemigroup& m, const IntVector& element, std::size_t atom);
/// t(M, m_i) = max of t(m, m_i) over phi(Minimals Z(m_i + M)).
Maximum<Integer> tame_wrt(const AffineSemigroup& m, std::size_t atom);
Maximum<Integer> tame(const AffineSemigroup& m);
/// Max over m in {m_1, ..., m_e} + (union of Ap(S, m_i) \ {0}) of the
/// largest t(m, m_i) among atoms with m - m_i in S.
Maximum<Integer> tame(const NumericalSemigroup& s);

/// Max |x| over Minimals Z(m + M) (principal ideal path).
Integer omega(const AffineSemigroup& m, const IntVector& element);
/// Max over the atoms; `at` is the atom.
Maximum<Integer> omega(const AffineSemigroup& m);
/// Restricts the search for minimal factorizations to s + w with w in some
/// Ap(S, m_i).
Integer omega(const NumericalSemigroup& s, std::int64_t element);
Maximum<Integer> omega(const NumericalSemigroup& s);

/// |Z(m)|.
Integer denumerant(const AffineSemigroup& m, const IntVector& element);
/// Number of factorizations of maximal length.
Integer max_denumerant(const AffineSemigroup& m, const IntVector& element);

struct MaxDenumerantScan {
  Integer value;
  std::int64_t at = 0;
  std::int64_t scan_bound = 0;
  /// The bound was F(S) + 1 + m_1 m_e rather than one supplied by the caller.
  bool default_bound = false;
};

/// Max of the element value over s <= scan_bound; the default bound is
/// F(S) + 1 + m_1 m_e.
MaxDenumerantScan max_denumerant(const NumericalSemigroup& s, std::optional<std::int64_t> scan_bound = std::nullopt);

/// {c(b) : b Betti} together with 0. Throws InvalidArgument when the monoid
/// is not half-factorial.
std::vector<Integer> catenary_values_half_factorial(const AffineSemigroup& m);

/// Named exact values.
struct InvariantReport {
  using Value = std::variant<bool, Integer, Rational, std::vector<Integer>>;
  std::map<std::string, Value> values;
};

InvariantReport invariant_report(const AffineSemigroup& m);
/// Uses the Apery fast paths and adds the numerical-only invariants.
InvariantReport invariant_report(const NumericalSemigroup& s);

}  // namespace factorinv
