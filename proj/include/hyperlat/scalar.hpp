#pragma once

/**
 * @file scalar.hpp
 * @brief The scalar abstraction shared by every construction.
 *
 * Two backends exist: Rational (exact, the default) and double (inexact,
 * for speed exploration only). Every numeric routine is a template over the
 * scalar type, so a single run is pinned to one backend and the two can
 * never mix.
 */

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <string>

#include "hyperlat/errors.hpp"
#include "hyperlat/rational.hpp"

namespace hyperlat {

enum class Backend { exact, approx };

template <class T>
concept FieldScalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::exact;
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static Rational abs(const Rational& r) { return r.abs(); }
  static double magnitude(const Rational& r) { return std::fabs(r.to_double()); }
  static std::string text(const Rational& r) { return r.str(); }
  /// Exact equality; the tolerance is ignored.
  static bool near(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::approx;
  static double from_rational(const Rational& r) { return r.to_double(); }
  static bool is_zero(double v) { return v == 0.0; }
  static double abs(double v) { return std::fabs(v); }
  static double magnitude(double v) { return std::fabs(v); }
  static std::string text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  /// Relative comparison, scaled by max(1, |a|, |b|).
  static bool near(double a, double b, double tol) {
    const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    return std::fabs(a - b) <= tol * scale;
  }
};

template <class T>
T from_rational(const Rational& r) {
  return ScalarTraits<T>::from_rational(r);
}

template <class T>
bool is_zero(const T& v) {
  return ScalarTraits<T>::is_zero(v);
}

/// Integer power by repeated squaring; exact for Rational.
template <FieldScalar T>
T ipow(const T& base, std::int64_t e) {
  if (e < 0) {
    if (is_zero(base)) throw DivisionByZero();
    return ipow<T>(T(1) / base, -e);
  }
  T result(1);
  T b = base;
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1U) result = result * b;
    k >>= 1U;
    if (k != 0) b = b * b;
  }
  return result;
}

}  // namespace hyperlat
