#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/scalar.hpp"

namespace hyperlat {

/// A function sampled on a contiguous unit-step window of half-integers:
/// value j is f(start + j). Never empty.
template <FieldScalar T>
class GridFunction {
 public:
  GridFunction(HalfInt start, std::vector<T> values) : start_(start), values_(std::move(values)) {
    if (values_.empty()) throw WindowTooSmall("grid function needs at least one value");
  }

  template <class F>
  static GridFunction sample(const Window& w, F&& f) {
    if (w.length < 1) throw WindowTooSmall("window length must be positive");
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(w.length));
    for (std::int64_t j = 0; j < w.length; ++j) v.push_back(f(w.at(j)));
    return GridFunction(w.start, std::move(v));
  }

  HalfInt start() const noexcept { return start_; }
  HalfInt last() const { return start_ + static_cast<std::int64_t>(values_.size() - 1); }
  std::size_t size() const noexcept { return values_.size(); }
  Window window() const { return Window{start_, static_cast<std::int64_t>(values_.size())}; }
  bool contains(HalfInt s) const { return window().contains(s); }

  const T& at(HalfInt s) const {
    if (!contains(s)) throw OutOfWindow("s = " + s.str() + " outside " + window().str());
    return values_[static_cast<std::size_t>(*unit_steps(start_, s))];
  }
  const T& operator[](std::size_t j) const { return values_[j]; }
  std::span<const T> values() const noexcept { return values_; }

  GridFunction restricted(const Window& w) const {
    if (!contains(w.start) || !contains(w.last())) {
      throw OutOfWindow("window " + w.str() + " not inside " + window().str());
    }
    const auto offset = static_cast<std::size_t>(*unit_steps(start_, w.start));
    return GridFunction(w.start, std::vector<T>(values_.begin() + static_cast<std::ptrdiff_t>(offset),
                                                values_.begin() + static_cast<std::ptrdiff_t>(offset + w.length)));
  }

  GridFunction scaled(const T& c) const {
    std::vector<T> v(values_);
    for (auto& e : v) e = e * c;
    return GridFunction(start_, std::move(v));
  }

  bool is_identically_zero() const {
    for (const auto& e : values_) {
      if (!is_zero(e)) return false;
    }
    return true;
  }

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.start_ == b.start_ && a.values_ == b.values_;
  }

 private:
  HalfInt start_;
  std::vector<T> values_;
};

namespace detail {

template <FieldScalar T, class Op>
GridFunction<T> combine(const GridFunction<T>& a, const GridFunction<T>& b, Op op) {
  if (a.window() != b.window()) {
    throw OutOfWindow("pointwise operation on mismatched windows " + a.window().str() + " and " +
                      b.window().str());
  }
  std::vector<T> v;
  v.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) v.push_back(op(a[j], b[j]));
  return GridFunction<T>(a.start(), std::move(v));
}

}  // namespace detail

template <FieldScalar T>
GridFunction<T> operator+(const GridFunction<T>& a, const GridFunction<T>& b) {
  return detail::combine(a, b, [](const T& x, const T& y) { return x + y; });
}
template <FieldScalar T>
GridFunction<T> operator-(const GridFunction<T>& a, const GridFunction<T>& b) {
  return detail::combine(a, b, [](const T& x, const T& y) { return x - y; });
}
template <FieldScalar T>
GridFunction<T> operator*(const GridFunction<T>& a, const GridFunction<T>& b) {
  return detail::combine(a, b, [](const T& x, const T& y) { return x * y; });
}
template <FieldScalar T>
GridFunction<T> operator/(const GridFunction<T>& a, const GridFunction<T>& b) {
  return detail::combine(a, b, [](const T& x, const T& y) {
    if (is_zero(y)) throw DivisionByZero();
    return x / y;
  });
}

/// Largest |value|; for the exact backend the result is itself exact.
template <FieldScalar T>
T max_abs(const GridFunction<T>& f) {
  T best = ScalarTraits<T>::abs(f[0]);
  for (std::size_t j = 1; j < f.size(); ++j) {
    T a = ScalarTraits<T>::abs(f[j]);
    if (best < a) best = a;
  }
  return best;
}

/// CSV with header `s,value`.
template <FieldScalar T>
std::string to_csv(const GridFunction<T>& f) {
  std::ostringstream os;
  os << "s,value\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    os << (f.start() + static_cast<std::int64_t>(j)).str() << ',' << ScalarTraits<T>::text(f[j]) << '\n';
  }
  return os.str();
}

}  // namespace hyperlat
