#pragma once

/**
 * @file adjoint.hpp
 * @brief The adjoint equation L*[w] = sigma* Delta_{-1} Nabla_0 w + tau* Delta_0 w + lambda* w.
 *
 *   sigma*(s) = sigma(s−1) + tau(s−1) ∇x_{-1}(s)
 *   tau*(s)   = [sigma(s+1) − sigma(s−1) − tau(s−1) ∇x_{-1}(s)] / Δx_{-1}(s)
 *   lambda*   = lambda − Delta_{-1} f(s),  f(s) = [tau(s−1) ∇x_{-1}(s) − ∇sigma(s)] / ∇x(s)
 *
 * lambda* is computed from f and cross-checked against lambda − kappa_{-1}.
 */

#include "hyperlat/grid_function.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/hyper_equation.hpp"

namespace hyperlat {

template <FieldScalar T>
T sigma_star(const HyperEquation& eq, HalfInt s);

/// Throws DegenerateStep.
template <FieldScalar T>
T tau_star(const HyperEquation& eq, HalfInt s);

template <FieldScalar T>
struct AdjointCoefficients {
  GridFunction<T> sigma_star;
  GridFunction<T> tau_star;
  T lambda_star;
};

/// sigma*, tau* sampled on the window and lambda* from its defining
/// difference. Throws WindowTooSmall (length < 2), NonConstantLambdaStar if
/// the difference varies over the window, ConsistencyError if it differs
/// from lambda − kappa_{-1}.
template <FieldScalar T>
AdjointCoefficients<T> adjoint_coeffs(const HyperEquation& eq, const Window& window);

/// L*[w] on [w.start+1, w.last−1]. Throws WindowTooSmall.
template <FieldScalar T>
GridFunction<T> apply_L_star(const HyperEquation& eq, const GridFunction<T>& w);

/// sigma(s+1) Delta_{-1} Nabla_0 w − tau_{-2}(s+1) Nabla_0 w + (lambda − kappa_{-1}) w
/// on [w.start+1, w.last−1].
template <FieldScalar T>
GridFunction<T> apply_L_star_rewritten(const HyperEquation& eq, const GridFunction<T>& w);

/// sigma, tau and lambda recovered from the adjoint coefficients alone:
///   sigma(s) = sigma*(s−1) + tau*(s−1) ∇x_{-1}(s)
///   tau(s)   = [sigma*(s+1) − sigma*(s−1) − tau*(s−1) ∇x_{-1}(s)] / Δx_{-1}(s)
///   lambda   = lambda* − Delta_{-1} ([tau*(s−1) ∇x_{-1}(s) − ∇sigma*(s)] / ∇x(s))
template <FieldScalar T>
struct PrimalCoefficients {
  GridFunction<T> sigma;
  GridFunction<T> tau;
  T lambda;
};

/// Throws NonConstantLambdaStar if the recovered lambda varies over the window.
template <FieldScalar T>
PrimalCoefficients<T> reconstruct_primal(const HyperEquation& eq, const Window& window);

}  // namespace hyperlat
