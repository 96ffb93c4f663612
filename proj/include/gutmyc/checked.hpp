#pragma once

// Overflow-checked 64-bit integer used by every index and closed form.
// Any wrap throws std::overflow_error instead of producing a wrong audit.

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gutmyc {

class Exact {
 public:
  constexpr Exact() = default;

  template <std::integral T>
  constexpr Exact(T v) : v_(narrow(v)) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend constexpr Exact operator+(Exact a, Exact b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("integer overflow in addition");
    return raw(r);
  }
  friend constexpr Exact operator-(Exact a, Exact b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("integer overflow in subtraction");
    return raw(r);
  }
  friend constexpr Exact operator*(Exact a, Exact b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("integer overflow in multiplication");
    return raw(r);
  }
  constexpr Exact operator-() const { return Exact{} - *this; }
  constexpr Exact& operator+=(Exact o) { return *this = *this + o; }
  constexpr Exact& operator-=(Exact o) { return *this = *this - o; }
  constexpr Exact& operator*=(Exact o) { return *this = *this * o; }

  constexpr bool is_even() const { return (v_ & 1) == 0; }

  friend constexpr bool operator==(Exact, Exact) = default;
  friend constexpr auto operator<=>(Exact, Exact) = default;

  friend std::ostream& operator<<(std::ostream& os, Exact e) { return os << e.v_; }

 private:
  static constexpr Exact raw(std::int64_t v) {
    Exact e;
    e.v_ = v;
    return e;
  }

  template <std::integral T>
  static constexpr std::int64_t narrow(T v) {
    if constexpr (std::is_unsigned_v<T>) {
      if (v > static_cast<std::make_unsigned_t<std::int64_t>>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("integer does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
  }

  std::int64_t v_ = 0;
};

// Exact division by two. Used where a closed form carries a half-integer
// coefficient: callers evaluate twice the expression and halve at the end.
inline Exact halve(Exact twice) {
  if (!twice.is_even()) throw std::domain_error("expression is not an integer (odd numerator over 2)");
  return Exact(twice.value() / 2);
}

}  // namespace gutmyc
