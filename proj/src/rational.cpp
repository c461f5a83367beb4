#include "hyperlat/rational.hpp"

#include <ostream>

#include "hyperlat/errors.hpp"

namespace hyperlat {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

Rational rat_pow(const Rational& a, std::int64_t e) {
  if (e < 0) {
    if (a.is_zero()) throw DivisionByZero();
    return rat_pow(a.reciprocal(), -e);
  }
  Rational result = 1;
  Rational base = a;
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == num_begin) throw ParseError("expected digits", pos);
  const std::string_view num_digits = text.substr(0, pos);

  std::string_view den_digits = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("unexpected character", pos);
    ++pos;
    const std::size_t den_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits", pos);
    if (pos != text.size()) throw ParseError("unexpected character", pos);
    den_digits = text.substr(den_begin, pos - den_begin);
  }

  const mpz_class num(std::string(num_digits), 10);
  const mpz_class den(std::string(den_digits), 10);
  if (den == 0) throw DivisionByZero();
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hyperlat
