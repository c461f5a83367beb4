#pragma once

/**
 * @file lattice.hpp
 * @brief The two nonuniform lattice families and their scalar ladders.
 *
 *   q-quadratic:  x(s) = c1 q^s + c2 q^{-s} + c3,   q = p^2
 *   quadratic:    x(s) = ct1 s^2 + ct2 s + ct3
 *
 * x_k(s) = x(s + k/2). All evaluation points are half-integers, so with q
 * supplied through its square root p every q^{s+k/2} = p^{2s+k} is rational.
 *
 * The lattice scalars are
 *   nu(mu)    = (q^{mu/2} - q^{-mu/2}) / (q^{1/2} - q^{-1/2})   (mu on the quadratic lattice)
 *   alpha(mu) = (q^{mu/2} + q^{-mu/2}) / 2                      (1 on the quadratic lattice)
 *   kappa_mu  = alpha(mu-1) tau~' + nu(mu-1) sigma~''/2
 */

#include <array>
#include <cstdint>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/rational.hpp"
#include "hyperlat/scalar.hpp"

namespace hyperlat {

enum class LatticeFamily { q_quadratic, quadratic };

const char* to_string(LatticeFamily f);

class Lattice {
 public:
  /// Throws InvalidLattice if p is 0 or ±1, or if c1·c2 = 0 without allow_degenerate.
  static Lattice q_quadratic(Rational p, Rational c1, Rational c2, Rational c3,
                             bool allow_degenerate = false);
  /// Throws InvalidLattice if ct1 = 0 without allow_degenerate.
  static Lattice quadratic(Rational ct1, Rational ct2, Rational ct3, bool allow_degenerate = false);

  LatticeFamily family() const noexcept { return family_; }
  /// q^{1/2}; only meaningful for the q-quadratic family (1 otherwise).
  const Rational& p() const noexcept { return p_; }
  /// (c1, c2, c3) or (ct1, ct2, ct3).
  const std::array<Rational, 3>& coefficients() const noexcept { return c_; }
  bool allow_degenerate() const noexcept { return allow_degenerate_; }

  /// c1·c2 ≠ 0 (q-quadratic) or ct1 ≠ 0 (quadratic).
  bool is_nonuniform() const;
  /// The stricter textbook condition: c1·c2 ≠ 0 or ct1·ct2 ≠ 0.
  bool meets_strict_definition() const;

  /// x_k(s) = x(s + k/2).
  template <FieldScalar T>
  T x(std::int64_t k, HalfInt s) const;

  /// x_k(s+1) − x_k(s).
  template <FieldScalar T>
  T forward_step(std::int64_t k, HalfInt s) const {
    return x<T>(k, s + 1) - x<T>(k, s);
  }
  /// x_k(s) − x_k(s−1).
  template <FieldScalar T>
  T backward_step(std::int64_t k, HalfInt s) const {
    return x<T>(k, s) - x<T>(k, s - 1);
  }
  /// As forward_step/backward_step but throws DegenerateStep on zero.
  template <FieldScalar T>
  T checked_forward_step(std::int64_t k, HalfInt s) const;
  template <FieldScalar T>
  T checked_backward_step(std::int64_t k, HalfInt s) const;

  template <FieldScalar T>
  T nu(std::int64_t mu) const;
  template <FieldScalar T>
  T alpha(std::int64_t mu) const;

  /// The constant beta in (x(s+1) + x(s))/2 = alpha(1)·x_1(s) + beta.
  Rational beta() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice() = default;

  LatticeFamily family_ = LatticeFamily::quadratic;
  Rational p_ = 1;
  std::array<Rational, 3> c_{};
  bool allow_degenerate_ = false;
};

/// kappa_mu = alpha(mu−1)·tau1 + nu(mu−1)·sigma2/2, where sigma2 = sigma~'' and tau1 = tau~'.
template <FieldScalar T>
T kappa(const Lattice& lat, const Rational& sigma2, const Rational& tau1, std::int64_t mu);

/// nu, alpha and kappa precomputed for |mu| ≤ max_index. The table is
/// filled on construction and never mutated afterwards; lookups outside the
/// stored range are computed directly.
template <FieldScalar T>
class KappaTable {
 public:
  KappaTable(const Lattice& lat, const Rational& sigma2, const Rational& tau1, std::int64_t max_index);

  T nu(std::int64_t mu) const;
  T alpha(std::int64_t mu) const;
  T kappa(std::int64_t mu) const;
  std::int64_t max_index() const noexcept { return max_index_; }

 private:
  const Lattice* lat_;
  Rational sigma2_;
  Rational tau1_;
  std::int64_t max_index_;
  std::vector<T> nu_;
  std::vector<T> alpha_;
  std::vector<T> kappa_;
};

}  // namespace hyperlat
