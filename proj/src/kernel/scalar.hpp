#pragma once

// Scalar types the kernel engines are instantiated with. Engines run on
// CheckedInt64 first and are rerun on Integer when an intermediate value
// leaves the 64-bit range, so results are always exact.

#include "factorinv/integer.hpp"

#include <cstdint>
#include <functional>

namespace factorinv::detail {

struct Overflow {};

class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT implicit on purpose

  constexpr std::int64_t value() const noexcept { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (a.v_ == INT64_MIN && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt64 operator-() const {
    if (v_ == INT64_MIN) throw Overflow{};
    return -v_;
  }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }

  friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;

 private:
  std::int64_t v_ = 0;
};

template <class S>
S from_integer(const Integer& v);

template <>
inline CheckedInt64 from_integer<CheckedInt64>(const Integer& v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return v.convert_to<std::int64_t>();
}

template <>
inline Integer from_integer<Integer>(const Integer& v) {
  return v;
}

inline Integer to_integer(CheckedInt64 v) { return Integer(v.value()); }
inline const Integer& to_integer(const Integer& v) { return v; }

inline std::int64_t to_int64(CheckedInt64 v) { return v.value(); }
inline std::int64_t to_int64(const Integer& v) { return factorinv::to_int64(v); }

inline CheckedInt64 scalar_gcd(CheckedInt64 a, CheckedInt64 b) {
  std::int64_t x = a.value() < 0 ? -a.value() : a.value();
  std::int64_t y = b.value() < 0 ? -b.value() : b.value();
  while (y != 0) {
    const std::int64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}
inline Integer scalar_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

/// Runs body<CheckedInt64>() and falls back to body<Integer>() on overflow.
template <class Result, class Body>
Result with_exact_scalars(Body&& body) {
  try {
    return body.template operator()<CheckedInt64>();
  } catch (const Overflow&) {
    return body.template operator()<Integer>();
  }
}

}  // namespace factorinv::detail
