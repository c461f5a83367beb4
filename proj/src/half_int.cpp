#include "hyperlat/half_int.hpp"

namespace hyperlat {

std::optional<HalfInt> HalfInt::from_rational(const Rational& r) {
  const mpz_class den = r.denominator();
  if (den != 1 && den != 2) return std::nullopt;
  const mpz_class twice = r.numerator() * (den == 1 ? 2 : 1);
  if (!twice.fits_slong_p()) return std::nullopt;
  return from_twice(twice.get_si());
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::optional<Window> window_between(HalfInt first, HalfInt last) {
  const auto steps = unit_steps(first, last);
  if (!steps || *steps < 0) return std::nullopt;
  return Window{first, *steps + 1};
}

}  // namespace hyperlat
