#pragma once

/**
 * @file rodrigues.hpp
 * @brief Solutions of L[y] = 0 at lambda = lambda_n built from Y_n(s) = rho(s) prod_{j<n} sigma(s−j).
 *
 *   polynomial:   y_n(s) = (1/rho) Delta_{-n}^(n) [Y_n](s)
 *   second kind:  y~_n(s) = (1/rho) Delta_{-n}^(n) [Y_n(s) S(s)],
 *                 S(s) = sum_{t=N}^{s} ∇x_{-n}(t) / (rho(t) prod_{j=0}^{n} sigma(t−j))
 *   generalized:  as the second kind with P_n[x_{-(n+1)}(t)] in the numerator of S.
 *
 * Every generator sets lambda := lambda_n and attaches apply_L of its output.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperlat/grid_function.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/hyper_equation.hpp"
#include "hyperlat/rational.hpp"

namespace hyperlat {

enum class SolutionKind { polynomial, second_kind, generalized };

const char* to_string(SolutionKind kind);

/// Window bookkeeping for a request "solution and residual on `output`".
struct Layout {
  Window output;    // where the residual is reported
  Window solution;  // output padded by one on each side (the L stencil)
  Window source;    // where Y_n is needed: solution extended by n on the right
  Window rho;       // the Pearson window: source padded by two, extended left to N
  HalfInt sum_base;
};

/// Default N is the left edge of the Pearson window. Throws OutOfWindow when
/// N lies right of source.start or is not an integer number of steps from it.
Layout layout_for(const Window& output, std::int64_t n, std::optional<HalfInt> sum_base = std::nullopt);

struct Construction {
  std::int64_t n = 0;
  Rational lambda_n;
  Layout layout;
  std::optional<std::int64_t> inadmissible_at;  // first m < n with lambda_m = lambda_n
  std::vector<Rational> P;                      // generalized only
};

template <FieldScalar T>
struct SolutionReport {
  GridFunction<T> solution;  // on layout.solution
  SolutionKind kind;
  GridFunction<T> residual;  // on layout.output
  Construction construction;
};

/// rho(s) prod_{j=0}^{n-1} sigma(s−j) on the window. Throws OutOfWindow.
template <FieldScalar T>
GridFunction<T> Y_n(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n, const Window& window);

/// (1/rho) Delta_{-n}^(n)[v] on [v.start, v.last − n].
template <FieldScalar T>
GridFunction<T> from_Y(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                       const GridFunction<T>& v);

/// The nabla form (1/rho) Nabla_n^(n)[rho_n] on the window.
template <FieldScalar T>
GridFunction<T> rodrigues_nabla_form(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                                     const Window& window);

/// Y_n(s) sum_{t=N}^{s} numerator(t) ∇x_{-n}(t) / (rho(t) prod_{j=0}^{n} sigma(t−j)) on the
/// window. Throws SingularSummand(t).
template <FieldScalar T>
GridFunction<T> hat_Y_n(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                        const Window& window, HalfInt sum_base, const std::function<T(HalfInt)>& numerator);

/// The weight on layout.rho anchored at its left edge.
template <FieldScalar T>
PearsonWeight<T> weight_for(const HyperEquation& eq, const Layout& layout);

/// A supplied weight must cover layout.rho; otherwise OutOfWindow.
template <FieldScalar T>
SolutionReport<T> rodrigues_polynomial(const HyperEquation& eq, std::int64_t n, const Window& output,
                                       const std::optional<PearsonWeight<T>>& weight = std::nullopt);

template <FieldScalar T>
SolutionReport<T> second_solution(const HyperEquation& eq, std::int64_t n, const Window& output,
                                  std::optional<HalfInt> sum_base = std::nullopt,
                                  const std::optional<PearsonWeight<T>>& weight = std::nullopt);

/// P holds n+1 coefficients of P_n in powers of x_{-(n+1)}(t).
template <FieldScalar T>
SolutionReport<T> generalized_solution(const HyperEquation& eq, std::int64_t n, const Window& output,
                                       const std::vector<Rational>& P,
                                       std::optional<HalfInt> sum_base = std::nullopt,
                                       const std::optional<PearsonWeight<T>>& weight = std::nullopt);

/// p0(s) = [sigma(s−1) − sigma(s−n) + tau(s−1) ∇x_{-1}(s)] / ∇x_{-n}(s), so that
/// sigma(s−n) ∇_{-n} Y_n(s) = p0(s) Y_n(s−1).
template <FieldScalar T>
T first_order_p0(const HyperEquation& eq, std::int64_t n, HalfInt s);

template <FieldScalar T>
struct LadderAuxiliaries {
  T gamma;  // [sigma(s−n+1) − sigma*(s)] / Δx_{-n}(s − 1/2)
  T ell;    // [sigma(s−n) − sigma*(s)] / ∇x_{-n}(s)
  T eta;    // Delta_{-(n+1)} ell(s, n)
};

/// Throws DegenerateStep.
template <FieldScalar T>
LadderAuxiliaries<T> gamma_ell_eta(const HyperEquation& eq, std::int64_t n, HalfInt s);

/// Monomial coefficients (in x(s)) of a polynomial solution of degree n at
/// lambda = lambda_n, from the exact null space of the system
/// sum_j c_j L[x^j](s) = 0 at s = first, ..., first+n+1. Normalized so the
/// highest nonzero coefficient is 1. Throws OracleDimensionError unless the
/// null space is one-dimensional.
std::vector<Rational> brute_force_polynomial_oracle(const HyperEquation& eq, std::int64_t n, HalfInt first);

/// Coefficients c_0..c_n with y(s) = sum c_j x(s)^j through the first n+1
/// samples of y. Throws DegenerateStep if two abscissae coincide.
std::vector<Rational> polynomial_coefficients(const Lattice& lat, const GridFunction<Rational>& y, std::int64_t n);

/// True when a = c·b for a nonzero scalar c (both nonzero vectors).
bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace hyperlat
