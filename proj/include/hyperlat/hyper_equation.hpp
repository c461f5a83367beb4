#pragma once

/**
 * @file hyper_equation.hpp
 * @brief The hypergeometric-type difference equation on a lattice.
 *
 *   L[y] = sigma(s) Delta_{-1} Nabla_0 y(s) + tau(s) Delta_0 y(s) + lambda y(s)
 *
 * with
 *   sigma(s) = sigma~(x(s)) − ½ tau~(x(s)) ∇x_1(s),   tau(s) = tau~(x(s)).
 *
 * The level-k ladder is
 *   tau_k(s) ∇x_{k+1}(s) = sigma(s+k) − sigma(s) + tau(s+k) ∇x_1(s+k)   (any integer k)
 *   mu_k = lambda + kappa_k nu(k),   lambda_n = −kappa_n nu(n).
 *
 * sigma and tau are evaluated on demand; only the Pearson weight rho is
 * stored as a grid.
 */

#include <array>
#include <cstdint>
#include <optional>

#include "hyperlat/grid_function.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/rational.hpp"

namespace hyperlat {

/// sigma~'' and tau~', the only coefficients the eigenvalue ladder sees.
struct LeadingCoefficients {
  Rational sigma2;
  Rational tau1;
};

class HyperEquation {
 public:
  /// sigma = (sigma~(0), sigma~'(0), sigma~''/2); tau = (tau~(0), tau~').
  HyperEquation(Lattice lattice, std::array<Rational, 3> sigma, std::array<Rational, 2> tau, Rational lambda);

  const Lattice& lattice() const noexcept { return lattice_; }
  const std::array<Rational, 3>& sigma_coefficients() const noexcept { return sigma_; }
  const std::array<Rational, 2>& tau_coefficients() const noexcept { return tau_; }
  const Rational& lambda() const noexcept { return lambda_; }

  Rational sigma_second_derivative() const { return sigma_[2] * 2; }
  const Rational& tau_slope() const noexcept { return tau_[1]; }
  LeadingCoefficients leading() const { return {sigma_second_derivative(), tau_slope()}; }

  HyperEquation with_lambda(Rational lambda) const;

  template <FieldScalar T>
  T sigma_tilde(const T& x) const {
    return (from_rational<T>(sigma_[2]) * x + from_rational<T>(sigma_[1])) * x + from_rational<T>(sigma_[0]);
  }
  template <FieldScalar T>
  T tau_tilde(const T& x) const {
    return from_rational<T>(tau_[1]) * x + from_rational<T>(tau_[0]);
  }

 private:
  Lattice lattice_;
  std::array<Rational, 3> sigma_;
  std::array<Rational, 2> tau_;
  Rational lambda_;
};

template <FieldScalar T>
T sigma_of_s(const HyperEquation& eq, HalfInt s);

template <FieldScalar T>
T tau_of_s(const HyperEquation& eq, HalfInt s);

/// The level-k quotient; any integer k. Throws DegenerateStep.
template <FieldScalar T>
T tau_k(const HyperEquation& eq, std::int64_t k, HalfInt s);

/// tau_nu is the same quotient as tau_k.
template <FieldScalar T>
T tau_nu(const HyperEquation& eq, std::int64_t nu, HalfInt s) {
  return tau_k<T>(eq, nu, s);
}

/// sigma~_nu(s) = sigma(s) + ½ tau_nu(s) ∇x_{nu+1}(s); a polynomial of degree ≤ 2 in x_nu(s).
template <FieldScalar T>
T sigma_tilde_nu(const HyperEquation& eq, std::int64_t nu, HalfInt s);

/// The level-k leading coefficient sigma~_k[x_k(s)] − ½ tau~_k[x_k(s)] ∇x_{k+1}(s),
/// built from sigma~_k and tau_k. It coincides with sigma(s) at every level.
template <FieldScalar T>
T sigma_k(const HyperEquation& eq, std::int64_t k, HalfInt s);

/// mu_k = lambda + kappa_k nu(k).
template <FieldScalar T>
T mu_k(const HyperEquation& eq, std::int64_t k);

/// lambda + sum_{j<k} Delta_j tau_j(s), evaluated from grid differences at s.
template <FieldScalar T>
T mu_k_by_differences(const HyperEquation& eq, std::int64_t k, HalfInt s);

/// lambda_n = −kappa_n nu(n).
template <FieldScalar T>
T lambda_n(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n);
template <FieldScalar T>
T lambda_n(const HyperEquation& eq, std::int64_t n) {
  return lambda_n<T>(eq.lattice(), eq.leading(), n);
}

/// First m < n with lambda_m = lambda_n (exact comparison), if any.
std::optional<std::int64_t> first_inadmissible(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n);
inline bool is_admissible(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n) {
  return !first_inadmissible(lat, c, n).has_value();
}

/// rho on a window with rho(anchor) = 1 and
///   sigma(s+1) rho(s+1) = (sigma(s) + tau(s) ∇x_1(s)) rho(s).
template <FieldScalar T>
struct PearsonWeight {
  GridFunction<T> rho;
  HalfInt anchor;

  PearsonWeight scaled(const T& c) const { return {rho.scaled(c), anchor}; }
};

/// Throws PearsonSingularity naming the grid point where a step factor vanishes.
template <FieldScalar T>
PearsonWeight<T> pearson_weight(const HyperEquation& eq, const Window& window, HalfInt anchor);
template <FieldScalar T>
PearsonWeight<T> pearson_weight(const HyperEquation& eq, const Window& window) {
  return pearson_weight<T>(eq, window, window.start);
}

/// rho_k(s) = rho(s+k) prod_{i=1}^{k} sigma(s+i); k = 0 gives rho(s).
template <FieldScalar T>
T rho_k(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t k, HalfInt s);

/// Residual of L[y] on [y.start+1, y.last−1]. Throws WindowTooSmall.
template <FieldScalar T>
GridFunction<T> apply_L(const HyperEquation& eq, const GridFunction<T>& y);

/// Self-adjoint form Delta_{-1}[sigma rho Nabla_0 y] + lambda rho y on
/// [y.start+1, y.last−1]; rho must cover y's window.
template <FieldScalar T>
GridFunction<T> apply_self_adjoint(const HyperEquation& eq, const PearsonWeight<T>& weight,
                                   const GridFunction<T>& y);

/// sigma~*(s) = sigma(s+1) + ½ tau_{-2}(s+1) ∇x_{-1}(s+1), the leading
/// coefficient of the adjoint equation in hypergeometric form.
template <FieldScalar T>
T sigma_tilde_star(const HyperEquation& eq, HalfInt s);

/// The ladder coefficient of the equation satisfied by Y_n, from its
/// defining quotient
///   [sigma(s−n+k+1) − sigma(s−1) − tau(s−1) ∇x_{-1}(s)] / Delta x_{-n}(s + (k−1)/2).
template <FieldScalar T>
T hat_tau_k(const HyperEquation& eq, std::int64_t n, std::int64_t k, HalfInt s);

/// The same coefficient through the tau ladder: −tau_{n−k−2}(s − n + k + 1).
template <FieldScalar T>
T hat_tau_k_via_ladder(const HyperEquation& eq, std::int64_t n, std::int64_t k, HalfInt s);

/// mu^_n = −kappa_{n−1} nu(n+1). Both closed forms (this and
/// −kappa_{-1} − kappa_n nu(n)) are evaluated; disagreement throws ConsistencyError.
template <FieldScalar T>
T hat_mu_n(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n);
template <FieldScalar T>
T hat_mu_n(const HyperEquation& eq, std::int64_t n) {
  return hat_mu_n<T>(eq.lattice(), eq.leading(), n);
}

/// sum_{k=-1}^{n-1} Delta_{k−n} hat_tau_k(s), evaluated from grid differences.
template <FieldScalar T>
T hat_mu_n_by_differences(const HyperEquation& eq, std::int64_t n, HalfInt s);

}  // namespace hyperlat
