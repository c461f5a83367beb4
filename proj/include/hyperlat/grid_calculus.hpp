#pragma once

/**
 * @file grid_calculus.hpp
 * @brief Divided differences and discrete integrals on a lattice.
 *
 *   Delta_k f(s) = (f(s+1) − f(s)) / (x_k(s+1) − x_k(s))
 *   Nabla_k f(s) = (f(s) − f(s−1)) / (x_k(s) − x_k(s−1))
 *
 * Iterated operators compose right to left:
 *   Delta_k^(n) = Delta_{k+n−1} ∘ … ∘ Delta_{k+1} ∘ Delta_k
 *   Nabla_k^(n) = Nabla_{k−n+1} ∘ … ∘ Nabla_{k−1} ∘ Nabla_k
 *
 * Window bookkeeping: Delta drops the last point, Nabla drops the first.
 */

#include <cstdint>

#include "hyperlat/grid_function.hpp"
#include "hyperlat/half_int.hpp"
#include "hyperlat/lattice.hpp"

namespace hyperlat {

/// Result window [start, last−1]. Throws WindowTooSmall, DegenerateStep.
template <FieldScalar T>
GridFunction<T> delta_k(const Lattice& lat, std::int64_t k, const GridFunction<T>& f);

/// Result window [start+1, last]. Throws WindowTooSmall, DegenerateStep.
template <FieldScalar T>
GridFunction<T> nabla_k(const Lattice& lat, std::int64_t k, const GridFunction<T>& f);

/// n = 0 returns f. Result window shrinks by n on the right.
template <FieldScalar T>
GridFunction<T> iterated_delta(const Lattice& lat, std::int64_t k, int n, const GridFunction<T>& f);

/// n = 0 returns f. Result window shrinks by n on the left.
template <FieldScalar T>
GridFunction<T> iterated_nabla(const Lattice& lat, std::int64_t k, int n, const GridFunction<T>& f);

/// sum_{t=N}^{s} g(t) (x_k(t) − x_k(t−1)). Requires N ≤ s, both in g's
/// window and an integer number of steps apart; throws OutOfWindow otherwise.
template <FieldScalar T>
T nabla_sum(const Lattice& lat, std::int64_t k, const GridFunction<T>& g, HalfInt N, HalfInt s);

/// The running sums F(s) = nabla_sum(k, g, N, s) for s in [N, g.last()].
template <FieldScalar T>
GridFunction<T> cumulative_nabla_sum(const Lattice& lat, std::int64_t k, const GridFunction<T>& g,
                                     HalfInt N);

}  // namespace hyperlat
