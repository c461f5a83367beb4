#include <gtest/gtest.h>

#include "hyperlat/errors.hpp"
#include "hyperlat/grid_calculus.hpp"
#include "hyperlat/hyper_equation.hpp"
#include "test_support.hpp"

using namespace hyperlat;
using hyperlat::testing::configs;
using hyperlat::testing::Gen;
using hyperlat::testing::linear_sigma_equation;
using hyperlat::testing::q;
using hyperlat::testing::sample_equation;

namespace {

const Lattice kSquares = Lattice::quadratic(1, 0, 0);
const Lattice kQ2 = Lattice::q_quadratic(2, 1, 1, 0);

std::vector<HyperEquation> equations(const Lattice& lat) {
  return {sample_equation(lat, q(3, 7)), linear_sigma_equation(lat, -2)};
}

}  // namespace

TEST(HyperEquation, SigmaOfS) {
  const HyperEquation no_tau(kSquares, {1, 2, 3}, {0, 0}, 0);
  EXPECT_EQ(sigma_of_s<Rational>(no_tau, 2), Rational(1 + 2 * 4 + 3 * 16));

  const HyperEquation e(kSquares, {0, 1, 0}, {1, 0}, 0);
  for (std::int64_t i = -6; i <= 6; ++i) {
    const HalfInt s = HalfInt::from_twice(i);
    const Rational r = s.to_rational();
    EXPECT_EQ(sigma_of_s<Rational>(e, s), r * r - r) << s.str();
  }
  const HyperEquation one(kQ2, {1, 0, 0}, {0, 0}, 0);
  EXPECT_EQ(sigma_of_s<Rational>(one, HalfInt::from_twice(5)), Rational(1));
}

TEST(HyperEquation, TauOfS) {
  EXPECT_EQ(tau_of_s<Rational>(HyperEquation(kSquares, {0, 0, 0}, {3, 2}, 0), 2), Rational(11));
  EXPECT_EQ(tau_of_s<Rational>(HyperEquation(kSquares, {1, 0, 0}, {0, 0}, 0), 7), Rational(0));
  EXPECT_EQ(tau_of_s<Rational>(HyperEquation(kQ2, {0, 0, 0}, {0, 1}, 0), 1), q(17, 4));
}

TEST(HyperEquation, TauKBaseLevelIsTau) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      for (std::int64_t j = 0; j < 6; ++j) {
        const HalfInt s = c.first + j;
        EXPECT_EQ(tau_k<Rational>(eq, 0, s), tau_of_s<Rational>(eq, s));
      }
    }
  }
}

TEST(HyperEquation, TauKSlopeIsKappa) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      const auto lc = eq.leading();
      for (std::int64_t k = -6; k <= 6; ++k) {
        const HalfInt s = c.first + 8;
        const Rational slope = (tau_k<Rational>(eq, k, s + 1) - tau_k<Rational>(eq, k, s)) /
                               c.lattice.forward_step<Rational>(k, s);
        EXPECT_EQ(slope, kappa<Rational>(c.lattice, lc.sigma2, lc.tau1, 2 * k + 1)) << c.name << " k=" << k;
        // tau_k − kappa_{2k+1} x_k is the same at a third point
        const Rational k2 = kappa<Rational>(c.lattice, lc.sigma2, lc.tau1, 2 * k + 1);
        EXPECT_EQ(tau_k<Rational>(eq, k, s) - k2 * c.lattice.x<Rational>(k, s),
                  tau_k<Rational>(eq, k, s + 3) - k2 * c.lattice.x<Rational>(k, s + 3));
      }
    }
  }
  const HyperEquation e(Lattice::quadratic(1, 1, 0), {1, 1, 0}, {0, 1}, 0);
  const Rational slope =
      (tau_k<Rational>(e, 1, 4) - tau_k<Rational>(e, 1, 3)) / e.lattice().forward_step<Rational>(1, 3);
  EXPECT_EQ(slope, Rational(1));
}

TEST(HyperEquation, SigmaTildeNu) {
  const HyperEquation e(kSquares, {0, 1, 0}, {0, 0}, 0);
  EXPECT_EQ(tau_nu<Rational>(e, 2, 1), Rational(2));
  EXPECT_EQ(sigma_tilde_nu<Rational>(e, 2, 1), Rational(5));

  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      for (std::int64_t j = 0; j < 4; ++j) {
        const HalfInt s = c.first + j;
        EXPECT_EQ(sigma_tilde_nu<Rational>(eq, 0, s), eq.sigma_tilde<Rational>(c.lattice.x<Rational>(0, s)));
      }
      // degree <= 2 in x_nu and <= 1 for tau_nu
      for (std::int64_t nu = -5; nu <= 5; ++nu) {
        const Window w{c.first, 6};
        const auto st = GridFunction<Rational>::sample(w, [&](HalfInt s) { return sigma_tilde_nu<Rational>(eq, nu, s); });
        const auto tn = GridFunction<Rational>::sample(w, [&](HalfInt s) { return tau_nu<Rational>(eq, nu, s); });
        EXPECT_TRUE(iterated_delta(c.lattice, nu, 3, st).is_identically_zero()) << c.name << " nu=" << nu;
        EXPECT_TRUE(iterated_delta(c.lattice, nu, 2, tn).is_identically_zero()) << c.name << " nu=" << nu;
      }
    }
  }
}

TEST(HyperEquation, SigmaKEqualsSigma) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      for (std::int64_t k = -5; k <= 5; ++k) {
        for (std::int64_t j = 0; j < 3; ++j) {
          const HalfInt s = c.first + j;
          EXPECT_EQ(sigma_k<Rational>(eq, k, s), sigma_of_s<Rational>(eq, s)) << c.name << " k=" << k;
        }
      }
    }
  }
}

TEST(HyperEquation, MuK) {
  const HyperEquation e1(Lattice::quadratic(1, 1, 0), {1, 0, 0}, {0, 1}, 0);
  EXPECT_EQ(mu_k<Rational>(e1, 0), Rational(0));
  EXPECT_EQ(mu_k<Rational>(e1, 3), Rational(3));
  EXPECT_EQ(mu_k_by_differences<Rational>(e1, 3, 5), Rational(3));

  const HyperEquation e2(kQ2, {0, 0, 1}, {0, 0}, 1);
  EXPECT_EQ(mu_k<Rational>(e2, 2), q(7, 2));
  EXPECT_EQ(mu_k_by_differences<Rational>(e2, 2, 12), q(7, 2));
}

TEST(HyperEquation, MuKClosedFormMatchesSum) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      EXPECT_EQ(mu_k<Rational>(eq, 0), eq.lambda());
      for (std::int64_t k = 0; k <= 8; ++k) {
        EXPECT_EQ(mu_k<Rational>(eq, k), mu_k_by_differences<Rational>(eq, k, c.first + 2)) << c.name << " k=" << k;
      }
      for (std::int64_t k = -4; k < 0; ++k) {
        EXPECT_EQ(mu_k<Rational>(eq, k), mu_k_by_differences<Rational>(eq, k, c.first + 2)) << c.name << " k=" << k;
      }
    }
  }
}

TEST(HyperEquation, LambdaN) {
  for (const auto& c : configs()) {
    EXPECT_EQ(lambda_n<Rational>(c.lattice, {2, q(1, 2)}, 0), Rational(0));
    EXPECT_EQ(lambda_n<Rational>(c.lattice, {2, q(1, 2)}, 1), q(-1, 2));
    // mu_n = 0 exactly at lambda = lambda_n
    for (const auto& eq : equations(c.lattice)) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        const auto at = eq.with_lambda(lambda_n<Rational>(eq, n));
        EXPECT_TRUE(mu_k<Rational>(at, n).is_zero());
        EXPECT_TRUE(mu_k_by_differences<Rational>(at, n, c.first + 1).is_zero());
      }
    }
  }
  EXPECT_EQ(lambda_n<Rational>(kSquares, {2, 0}, 3), Rational(-6));
}

TEST(HyperEquation, Admissibility) {
  EXPECT_FALSE(first_inadmissible(kSquares, {2, q(1, 2)}, 5).has_value());
  EXPECT_TRUE(is_admissible(kSquares, {2, q(1, 2)}, 5));
  // tau~' = -(n+m-1) sigma~''/2 makes lambda_m = lambda_n
  EXPECT_EQ(first_inadmissible(kSquares, {2, -2}, 2), 1);
  EXPECT_EQ(first_inadmissible(kSquares, {0, 0}, 3), 0);
}

TEST(HyperEquation, PearsonWeight) {
  for (const auto& c : configs()) {
    const HyperEquation flat(c.lattice, {1, 0, 0}, {0, 0}, 0);
    const auto w = pearson_weight<Rational>(flat, Window{c.first, 6}, c.first + 2);
    for (const auto& v : w.rho.values()) EXPECT_EQ(v, Rational(1));

    for (const auto& eq : equations(c.lattice)) {
      const auto pw = pearson_weight<Rational>(eq, Window{c.first, 10}, c.first + 4);
      EXPECT_EQ(pw.rho.at(c.first + 4), Rational(1));
      EXPECT_EQ(pw.anchor, c.first + 4);
      const auto sr = GridFunction<Rational>::sample(pw.rho.window(), [&](HalfInt s) {
        return sigma_of_s<Rational>(eq, s) * pw.rho.at(s);
      });
      const auto d = delta_k(c.lattice, -1, sr);
      for (HalfInt s = d.start(); s <= d.last(); ++s) {
        EXPECT_EQ(d.at(s), tau_of_s<Rational>(eq, s) * pw.rho.at(s));
      }
    }
  }
}

TEST(HyperEquation, PearsonSingularity) {
  const HyperEquation e(kSquares, {0, 1, 0}, {0, 0}, 0);  // sigma(s) = s^2
  try {
    pearson_weight<Rational>(e, Window{-2, 6}, -2);
    FAIL() << "expected PearsonSingularity";
  } catch (const PearsonSingularity& err) {
    EXPECT_EQ(err.point(), "0");
  }
  EXPECT_THROW(pearson_weight<Rational>(e, Window{-2, 6}, 3), PearsonSingularity);
  EXPECT_THROW(pearson_weight<Rational>(e, Window{1, 4}, 9), OutOfWindow);
  EXPECT_NO_THROW(pearson_weight<Rational>(e, Window{1, 4}, 2));
}

TEST(HyperEquation, RhoK) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      const auto pw = pearson_weight<Rational>(eq, Window{c.first, 14});
      const HalfInt s = c.first + 2;
      EXPECT_EQ(rho_k<Rational>(eq, pw, 0, s), pw.rho.at(s));
      EXPECT_EQ(rho_k<Rational>(eq, pw, 1, s), pw.rho.at(s + 1) * sigma_of_s<Rational>(eq, s + 1));
      EXPECT_THROW(rho_k<Rational>(eq, pw, 20, s), OutOfWindow);

      // level-k Pearson identity Delta_{k-1}[sigma_k rho_k] = tau_k rho_k
      for (std::int64_t k = 1; k <= 4; ++k) {
        const Window w{c.first, 14 - k};
        const auto sr = GridFunction<Rational>::sample(w, [&](HalfInt t) {
          return sigma_k<Rational>(eq, k, t) * rho_k<Rational>(eq, pw, k, t);
        });
        const auto d = delta_k(c.lattice, k - 1, sr);
        for (HalfInt t = d.start(); t <= d.last(); ++t) {
          EXPECT_EQ(d.at(t), tau_k<Rational>(eq, k, t) * rho_k<Rational>(eq, pw, k, t)) << c.name << " k=" << k;
        }
      }
    }
  }
}

TEST(HyperEquation, ApplyL) {
  Gen g(31);
  for (const auto& c : configs()) {
    const Lattice& lat = c.lattice;
    const HyperEquation zero_lambda = sample_equation(lat, 0);
    const auto constant = apply_L(zero_lambda, GridFunction<Rational>(c.first, std::vector<Rational>(5, q(7, 3))));
    EXPECT_TRUE(constant.is_identically_zero());
    EXPECT_EQ(constant.window(), (Window{c.first + 1, 3}));

    for (const auto& eq : equations(lat)) {
      const auto y = g.grid(c.first, 7);
      const auto r = apply_L(eq, y);
      for (HalfInt s = r.start(); s <= r.last(); ++s) {
        // independent three-point stencil
        const Rational fwd = (y.at(s + 1) - y.at(s)) / (lat.x<Rational>(0, s + 1) - lat.x<Rational>(0, s));
        const Rational bwd = (y.at(s) - y.at(s - 1)) / (lat.x<Rational>(0, s) - lat.x<Rational>(0, s - 1));
        const Rational mid = lat.x<Rational>(-1, s + 1) - lat.x<Rational>(-1, s);
        const Rational expect = sigma_of_s<Rational>(eq, s) * (fwd - bwd) / mid + tau_of_s<Rational>(eq, s) * fwd +
                                eq.lambda() * y.at(s);
        EXPECT_EQ(r.at(s), expect);
      }
      // self-adjoint form equals rho L[y]
      const auto pw = pearson_weight<Rational>(eq, y.window());
      const auto sa = apply_self_adjoint(eq, pw, y);
      for (HalfInt s = sa.start(); s <= sa.last(); ++s) EXPECT_EQ(sa.at(s), pw.rho.at(s) * r.at(s));
    }

    // y_1 = tau~(x(s)) solves L[y] = 0 at lambda_1
    for (const auto& eq : equations(lat)) {
      const auto at = eq.with_lambda(lambda_n<Rational>(eq, 1));
      const auto y1 = GridFunction<Rational>::sample(Window{c.first, 6}, [&](HalfInt s) { return tau_of_s<Rational>(at, s); });
      EXPECT_TRUE(apply_L(at, y1).is_identically_zero());
    }
  }
  EXPECT_THROW(apply_L(sample_equation(kSquares), GridFunction<Rational>(HalfInt(1), {1, 2})), WindowTooSmall);
}

TEST(HyperEquation, SigmaTildeStarIsQuadraticInX) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      const auto f = GridFunction<Rational>::sample(Window{c.first, 5}, [&](HalfInt s) { return sigma_tilde_star<Rational>(eq, s); });
      EXPECT_TRUE(iterated_delta(c.lattice, 0, 3, f).is_identically_zero()) << c.name;
      EXPECT_EQ(f.at(c.first), sigma_tilde_nu<Rational>(eq, -2, c.first + 1));
    }
  }
}

TEST(HyperEquation, HatTau) {
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      const auto lc = eq.leading();
      for (std::int64_t n = 1; n <= 5; ++n) {
        for (std::int64_t k = -1; k <= n; ++k) {
          const HalfInt s = c.first + n + 2;
          EXPECT_EQ(hat_tau_k<Rational>(eq, n, k, s), hat_tau_k_via_ladder<Rational>(eq, n, k, s))
              << c.name << " n=" << n << " k=" << k;
          const Rational slope = kappa<Rational>(c.lattice, lc.sigma2, lc.tau1, 2 * (n - k - 2) + 1);
          EXPECT_EQ(hat_tau_k<Rational>(eq, n, k, s) + slope * c.lattice.x<Rational>(k - n, s),
                    hat_tau_k<Rational>(eq, n, k, s + 1) + slope * c.lattice.x<Rational>(k - n, s + 1))
              << c.name << " n=" << n << " k=" << k;
        }
        // k = n is the adjoint tau*
        const HalfInt s = c.first + 3;
        EXPECT_EQ(hat_tau_k<Rational>(eq, n, n, s), -tau_k<Rational>(eq, -2, s + 1));
      }
    }
  }
}

TEST(HyperEquation, HatMu) {
  const Lattice quad = Lattice::quadratic(1, 1, 0);
  EXPECT_EQ(hat_mu_n<Rational>(quad, {0, 1}, 2), Rational(-3));
  EXPECT_EQ(hat_mu_n<Rational>(quad, {0, 0}, 1), Rational(0));
  for (const auto& c : configs()) {
    for (const auto& eq : equations(c.lattice)) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        const Rational closed = hat_mu_n<Rational>(eq, n);
        EXPECT_EQ(hat_mu_n_by_differences<Rational>(eq, n, c.first + n + 2), closed) << c.name << " n=" << n;
        const auto lc = eq.leading();
        EXPECT_EQ(closed, -kappa<Rational>(c.lattice, lc.sigma2, lc.tau1, -1) - kappa<Rational>(c.lattice, lc.sigma2, lc.tau1, n) * c.lattice.nu<Rational>(n));
      }
    }
  }
}

TEST(HyperEquation, DoubleBackendTracksExact) {
  for (const auto& c : configs()) {
    const HyperEquation eq = sample_equation(c.lattice, q(1, 3));
    const HalfInt s = c.first + 2;
    for (std::int64_t k = -3; k <= 3; ++k) {
      const double exact = tau_k<Rational>(eq, k, s).to_double();
      EXPECT_TRUE(ScalarTraits<double>::near(tau_k<double>(eq, k, s), exact, 1e-9));
    }
    EXPECT_TRUE(ScalarTraits<double>::near(hat_mu_n<double>(eq, 3), hat_mu_n<Rational>(eq, 3).to_double(), 1e-9));
  }
}
