#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "hyperlat/rational.hpp"

namespace hyperlat {

/// An exact half-integer, stored as twice its value. Lattice arguments
/// s + k/2 always live here.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT(google-explicit-constructor)
  constexpr HalfInt(int integer) : twice_(2 * static_cast<std::int64_t>(integer)) {}  // NOLINT

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  /// Accepts only values with denominator 1 or 2.
  static std::optional<HalfInt> from_rational(const Rational& r);

  constexpr std::int64_t twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// s + k/2.
  constexpr HalfInt shifted_half(std::int64_t k) const { return from_twice(twice_ + k); }

  friend constexpr HalfInt operator+(HalfInt s, std::int64_t k) { return from_twice(s.twice_ + 2 * k); }
  friend constexpr HalfInt operator-(HalfInt s, std::int64_t k) { return from_twice(s.twice_ - 2 * k); }
  HalfInt& operator++() {
    twice_ += 2;
    return *this;
  }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  Rational to_rational() const { return Rational(static_cast<long>(twice_), 2L); }
  /// `3`, `-7/2`.
  std::string str() const;

 private:
  std::int64_t twice_ = 0;
};

/// Number of unit steps from a to b, or nullopt when b − a is not an integer.
constexpr std::optional<std::int64_t> unit_steps(HalfInt a, HalfInt b) {
  const std::int64_t d = b.twice() - a.twice();
  if (d % 2 != 0) return std::nullopt;
  return d / 2;
}

/// A contiguous unit-step window start, start+1, ..., start+length−1.
struct Window {
  HalfInt start;
  std::int64_t length = 1;

  HalfInt last() const { return start + (length - 1); }
  HalfInt at(std::int64_t j) const { return start + j; }
  bool contains(HalfInt s) const {
    const auto d = unit_steps(start, s);
    return d && *d >= 0 && *d < length;
  }
  std::string str() const { return "[" + start.str() + ", " + last().str() + "]"; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Window from inclusive endpoints; requires an integer number of steps.
std::optional<Window> window_between(HalfInt first, HalfInt last);

}  // namespace hyperlat
