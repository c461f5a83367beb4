#pragma once

#include "hyperlat/spec_parser.hpp"
#include "test_support.hpp"

namespace hyperlat::testing {

/// A random spec that satisfies every parser invariant.
inline ProblemSpec random_spec(Gen& g) {
  const bool degenerate_ok = g.integer(0, 3) == 0;
  auto lattice = [&]() {
    if (g.integer(0, 1) == 0) {
      Rational p;
      do {
        p = g.nonzero_rational();
      } while (p == Rational(1) || p == Rational(-1));
      const Rational c2 = degenerate_ok && g.integer(0, 1) == 0 ? Rational(0) : g.nonzero_rational();
      return Lattice::q_quadratic(p, g.nonzero_rational(), c2, g.rational(), degenerate_ok);
    }
    return Lattice::quadratic(g.nonzero_rational(), g.rational(), g.rational(), degenerate_ok);
  }();
  const std::int64_t n = g.integer(0, default_max_n);
  const HalfInt start = HalfInt::from_twice(g.integer(-100, 100));
  const Window window{start, n + 5 + g.integer(0, 25)};
  std::optional<HalfInt> sum_base;
  if (g.integer(0, 1) == 0) sum_base = start - 1 - g.integer(0, 6);
  std::optional<std::vector<Rational>> P;
  if (g.integer(0, 1) == 0) P = g.coefficients(static_cast<std::size_t>(n) + 1);
  std::optional<Rational> lambda;
  if (g.integer(0, 2) == 0) lambda = g.rational();
  return ProblemSpec{lattice,
                     {g.rational(), g.rational(), g.rational()},
                     {g.rational(), g.rational()},
                     lambda,
                     n,
                     window,
                     sum_base,
                     P,
                     g.integer(0, 1) == 0 ? Backend::exact : Backend::approx,
                     degenerate_ok};
}

}  // namespace hyperlat::testing
