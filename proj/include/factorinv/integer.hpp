#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factorinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer; nullopt on any stray character.
std::optional<Integer> parse_integer(std::string_view text);

/// Narrowing conversion that throws std::overflow_error instead of truncating.
std::int64_t to_int64(const Integer& value);

/// Fixed-length vector of exact integers. Factorizations, lattice elements
/// and monoid elements in N^k all use this type.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t size) : entries_(size) {}
  IntVector(std::initializer_list<Integer> entries) : entries_(entries) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}

  static IntVector unit(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  friend IntVector operator+(IntVector lhs, const IntVector& rhs) { return lhs += rhs; }
  friend IntVector operator-(IntVector lhs, const IntVector& rhs) { return lhs -= rhs; }
  IntVector operator-() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  /// Lexicographic order; used for every sorted output.
  friend std::strong_ordering operator<=>(const IntVector& lhs, const IntVector& rhs);

  /// Sum of the entries; the length |x| of a factorization.
  Integer total() const;
  Integer dot(const IntVector& other) const;
  bool is_zero() const;
  bool is_nonnegative() const;

  /// Componentwise order on Z^n.
  bool leq(const IntVector& other) const;

  /// Positive and negative parts with x = plus - minus and plus . minus = 0.
  IntVector positive_part() const;
  IntVector negative_part() const;

  /// Componentwise minimum.
  IntVector meet(const IntVector& other) const;

  /// Concatenation, for lifting elements and building doubled systems.
  IntVector append(const IntVector& tail) const;
  IntVector head(std::size_t count) const;

 private:
  void require_same_size(const IntVector& other) const;

  std::vector<Integer> entries_;
};

/// "(a,b,c)".
std::string to_string(const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// gcd of the entries (nonnegative; 0 for the zero vector).
Integer content(const IntVector& v);

/// Divides by the content and flips sign so that the first nonzero entry is positive.
IntVector normalize_up_to_sign(const IntVector& v);

/// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<IntVector>& vs);

/// Keeps only the componentwise-minimal elements (after sort_unique).
std::vector<IntVector> minimal_elements(std::vector<IntVector> vs);

/// Dense row-major integer matrix. Columns are unknowns in linear systems
/// and generators in semigroup contexts.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// Throws MalformedSystem if the columns do not share a dimension.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;

  /// A x; throws MalformedSystem on size mismatch.
  IntVector apply(const IntVector& x) const;

  /// [this | other] and [this | -this].
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix negated() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace factorinv
