#include <gtest/gtest.h>

#include "hyperlat/errors.hpp"
#include "hyperlat/lattice.hpp"
#include "test_support.hpp"

using namespace hyperlat;
using hyperlat::testing::configs;
using hyperlat::testing::q;

TEST(Lattice, PointValues) {
  EXPECT_EQ(Lattice::quadratic(1, 0, 0).x<Rational>(0, 2), Rational(4));
  EXPECT_EQ(Lattice::q_quadratic(2, 1, 1, 0).x<Rational>(0, 1), q(17, 4));
  EXPECT_EQ(Lattice::quadratic(1, 1, 0).x<Rational>(1, 0), q(3, 4));
  EXPECT_DOUBLE_EQ(Lattice::q_quadratic(2, 1, 1, 0).x<double>(0, 1), 4.25);
}

TEST(Lattice, Construction) {
  EXPECT_THROW(Lattice::q_quadratic(1, 1, 1, 0), InvalidLattice);
  EXPECT_THROW(Lattice::q_quadratic(-1, 1, 1, 0), InvalidLattice);
  EXPECT_THROW(Lattice::q_quadratic(0, 1, 1, 0), InvalidLattice);
  EXPECT_THROW(Lattice::q_quadratic(2, 1, 0, 0), InvalidLattice);
  EXPECT_THROW(Lattice::quadratic(0, 1, 0), InvalidLattice);

  const Lattice d = Lattice::q_quadratic(2, 1, 0, 0, true);
  EXPECT_FALSE(d.is_nonuniform());
  EXPECT_TRUE(d.allow_degenerate());

  const Lattice plain = Lattice::quadratic(1, 0, 0);
  EXPECT_TRUE(plain.is_nonuniform());
  EXPECT_FALSE(plain.meets_strict_definition());
  EXPECT_TRUE(Lattice::quadratic(1, 1, 0).meets_strict_definition());
}

TEST(Lattice, DegenerateStepIsReported) {
  const Lattice lat = Lattice::quadratic(1, 1, 0);
  // symmetric about -1/2: x(0) = x(-1)
  EXPECT_THROW(lat.checked_forward_step<Rational>(0, -1), DegenerateStep);
  EXPECT_NO_THROW(lat.checked_forward_step<Rational>(0, 0));
}

TEST(Lattice, Nu) {
  for (const auto& c : configs()) {
    EXPECT_EQ(c.lattice.nu<Rational>(0), Rational(0));
    EXPECT_EQ(c.lattice.nu<Rational>(1), Rational(1));
  }
  EXPECT_EQ(Lattice::quadratic(1, 0, 0).nu<Rational>(5), Rational(5));
  EXPECT_EQ(Lattice::q_quadratic(2, 1, 1, 0).nu<Rational>(3), q(21, 4));
}

TEST(Lattice, Alpha) {
  for (const auto& c : configs()) EXPECT_EQ(c.lattice.alpha<Rational>(0), Rational(1));
  EXPECT_EQ(Lattice::quadratic(1, 0, 0).alpha<Rational>(9), Rational(1));
  EXPECT_EQ(Lattice::q_quadratic(2, 1, 1, 0).alpha<Rational>(2), q(17, 8));
}

TEST(Lattice, Kappa) {
  const Lattice quad = Lattice::quadratic(1, 0, 0);
  const Lattice q2 = Lattice::q_quadratic(2, 1, 1, 0);
  EXPECT_EQ(kappa<Rational>(quad, 0, 1, 1), Rational(1));
  EXPECT_EQ(kappa<Rational>(q2, 0, 1, 1), Rational(1));
  EXPECT_EQ(kappa<Rational>(quad, 2, 0, 4), Rational(3));
  EXPECT_EQ(kappa<Rational>(q2, 0, 1, 3), q(17, 8));
}

TEST(Lattice, SymmetryOfScalars) {
  for (const auto& c : configs()) {
    for (std::int64_t mu = -12; mu <= 12; ++mu) {
      EXPECT_EQ(c.lattice.nu<Rational>(-mu), -c.lattice.nu<Rational>(mu)) << c.name << " mu=" << mu;
      EXPECT_EQ(c.lattice.alpha<Rational>(-mu), c.lattice.alpha<Rational>(mu)) << c.name << " mu=" << mu;
    }
  }
}

TEST(Lattice, SuslovSums) {
  for (const auto& c : configs()) {
    const Lattice& lat = c.lattice;
    for (std::int64_t k = 1; k <= 12; ++k) {
      Rational sa;
      Rational sn;
      for (std::int64_t j = 0; j < k; ++j) {
        sa += lat.alpha<Rational>(2 * j);
        sn += lat.nu<Rational>(2 * j);
      }
      EXPECT_EQ(sa, lat.alpha<Rational>(k - 1) * lat.nu<Rational>(k)) << c.name << " k=" << k;
      EXPECT_EQ(sn, lat.nu<Rational>(k - 1) * lat.nu<Rational>(k)) << c.name << " k=" << k;
    }
  }
}

TEST(Lattice, MidpointCondition) {
  for (const auto& c : configs()) {
    const Lattice& lat = c.lattice;
    const Rational beta = lat.beta();
    for (std::int64_t i = -3; i <= 3; ++i) {
      const HalfInt s = HalfInt::from_twice(i);
      const Rational lhs = (lat.x<Rational>(0, s + 1) + lat.x<Rational>(0, s)) / 2;
      EXPECT_EQ(lhs, lat.alpha<Rational>(1) * lat.x<Rational>(1, s) + beta) << c.name << " s=" << s.str();
    }
  }
}

TEST(Lattice, MidpointConditionNeedsAlphaOne) {
  // With alpha(2) in place of alpha(1) the residual is not constant on a q-lattice.
  const Lattice lat = Lattice::q_quadratic(2, 1, 1, 0);
  auto r = [&](HalfInt s) {
    return (lat.x<Rational>(0, s + 1) + lat.x<Rational>(0, s)) / 2 - lat.alpha<Rational>(2) * lat.x<Rational>(1, s);
  };
  EXPECT_NE(r(0), r(1));
}

TEST(Lattice, IndexShift) {
  for (const auto& c : configs()) {
    for (std::int64_t k = -5; k <= 5; ++k) {
      for (std::int64_t i = -4; i <= 4; ++i) {
        const HalfInt s = HalfInt::from_twice(i);
        EXPECT_EQ(c.lattice.x<Rational>(k, s), c.lattice.x<Rational>(k + 2, s - 1));
      }
    }
  }
}

TEST(KappaTable, MatchesDefinitions) {
  for (const auto& c : configs()) {
    const KappaTable<Rational> table(c.lattice, 2, q(1, 2), 6);
    for (std::int64_t mu = -9; mu <= 9; ++mu) {
      EXPECT_EQ(table.nu(mu), c.lattice.nu<Rational>(mu));
      EXPECT_EQ(table.alpha(mu), c.lattice.alpha<Rational>(mu));
      EXPECT_EQ(table.kappa(mu), kappa<Rational>(c.lattice, 2, q(1, 2), mu));
    }
  }
}
