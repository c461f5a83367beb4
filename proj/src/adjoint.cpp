#include "hyperlat/adjoint.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hyperlat/grid_calculus.hpp"

namespace hyperlat {

namespace {

template <FieldScalar T>
bool agree(const T& a, const T& b) {
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    return ScalarTraits<T>::near(a, b, 1e-9);
  }
}

// lambda_ref − Delta_{-1} f over every point of `window`, where f is sampled on
// the window extended by one on the right. Throws if the value varies.
template <FieldScalar T, class F>
T shifted_constant(const Lattice& lat, const Window& window, const T& lambda_ref, F&& f, const char* what) {
  const GridFunction<T> fs = GridFunction<T>::sample(Window{window.start, window.length + 1}, f);
  const GridFunction<T> d = delta_k(lat, -1, fs);
  const T value = lambda_ref - d[0];
  for (std::size_t j = 1; j < d.size(); ++j) {
    const T v = lambda_ref - d[j];
    if (!agree(v, value)) {
      throw NonConstantLambdaStar(std::string(what) + " varies: " + ScalarTraits<T>::text(value) + " at s = " +
                                  d.start().str() + " but " + ScalarTraits<T>::text(v) + " at s = " +
                                  (d.start() + static_cast<std::int64_t>(j)).str());
    }
  }
  return value;
}

}  // namespace

template <FieldScalar T>
T sigma_star(const HyperEquation& eq, HalfInt s) {
  return sigma_of_s<T>(eq, s - 1) + tau_of_s<T>(eq, s - 1) * eq.lattice().backward_step<T>(-1, s);
}

template <FieldScalar T>
T tau_star(const HyperEquation& eq, HalfInt s) {
  const Lattice& lat = eq.lattice();
  const T num = sigma_of_s<T>(eq, s + 1) - sigma_of_s<T>(eq, s - 1) -
                tau_of_s<T>(eq, s - 1) * lat.backward_step<T>(-1, s);
  return num / lat.checked_forward_step<T>(-1, s);
}

template <FieldScalar T>
AdjointCoefficients<T> adjoint_coeffs(const HyperEquation& eq, const Window& window) {
  if (window.length < 2) throw WindowTooSmall("adjoint coefficients need a window of length >= 2");
  const Lattice& lat = eq.lattice();
  auto ss = GridFunction<T>::sample(window, [&](HalfInt s) { return sigma_star<T>(eq, s); });
  auto ts = GridFunction<T>::sample(window, [&](HalfInt s) { return tau_star<T>(eq, s); });

  const T lambda = from_rational<T>(eq.lambda());
  const T lambda_star = shifted_constant<T>(
      lat, window, lambda,
      [&](HalfInt s) {
        return (tau_of_s<T>(eq, s - 1) * lat.backward_step<T>(-1, s) -
                (sigma_of_s<T>(eq, s) - sigma_of_s<T>(eq, s - 1))) /
               lat.checked_backward_step<T>(0, s);
      },
      "lambda*");

  const LeadingCoefficients c = eq.leading();
  const T closed = lambda - kappa<T>(lat, c.sigma2, c.tau1, -1);
  if (!agree(lambda_star, closed)) {
    throw ConsistencyError("lambda* = " + ScalarTraits<T>::text(lambda_star) +
                           " from its definition but lambda - kappa_{-1} = " + ScalarTraits<T>::text(closed));
  }
  return {std::move(ss), std::move(ts), lambda_star};
}

template <FieldScalar T>
GridFunction<T> apply_L_star(const HyperEquation& eq, const GridFunction<T>& w) {
  if (w.size() < 3) throw WindowTooSmall("L*[w] needs at least 3 points, window " + w.window().str());
  const Lattice& lat = eq.lattice();
  const Window inner{w.start() + 1, static_cast<std::int64_t>(w.size()) - 2};
  const AdjointCoefficients<T> adj = adjoint_coeffs<T>(eq, Window{inner.start, std::max<std::int64_t>(inner.length, 2)});
  const GridFunction<T> second = delta_k(lat, -1, nabla_k(lat, 0, w));
  const GridFunction<T> first = delta_k(lat, 0, w).restricted(inner);
  return GridFunction<T>::sample(inner, [&](HalfInt s) {
    return adj.sigma_star.at(s) * second.at(s) + adj.tau_star.at(s) * first.at(s) + adj.lambda_star * w.at(s);
  });
}

template <FieldScalar T>
GridFunction<T> apply_L_star_rewritten(const HyperEquation& eq, const GridFunction<T>& w) {
  if (w.size() < 3) throw WindowTooSmall("L*[w] needs at least 3 points, window " + w.window().str());
  const Lattice& lat = eq.lattice();
  const Window inner{w.start() + 1, static_cast<std::int64_t>(w.size()) - 2};
  const GridFunction<T> grad = nabla_k(lat, 0, w);
  const GridFunction<T> second = delta_k(lat, -1, grad);
  const LeadingCoefficients c = eq.leading();
  const T shift = from_rational<T>(eq.lambda()) - kappa<T>(lat, c.sigma2, c.tau1, -1);
  return GridFunction<T>::sample(inner, [&](HalfInt s) {
    return sigma_of_s<T>(eq, s + 1) * second.at(s) - tau_k<T>(eq, -2, s + 1) * grad.at(s) + shift * w.at(s);
  });
}

template <FieldScalar T>
PrimalCoefficients<T> reconstruct_primal(const HyperEquation& eq, const Window& window) {
  if (window.length < 2) throw WindowTooSmall("dual reconstruction needs a window of length >= 2");
  const Lattice& lat = eq.lattice();
  // s−1 .. s+2 lookups on sigma* and s−1 .. s+1 on tau*
  const AdjointCoefficients<T> adj = adjoint_coeffs<T>(eq, Window{window.start - 1, window.length + 3});
  const GridFunction<T>& ss = adj.sigma_star;
  const GridFunction<T>& ts = adj.tau_star;

  auto sigma = GridFunction<T>::sample(window, [&](HalfInt s) {
    return ss.at(s - 1) + ts.at(s - 1) * lat.backward_step<T>(-1, s);
  });
  auto tau = GridFunction<T>::sample(window, [&](HalfInt s) {
    return (ss.at(s + 1) - ss.at(s - 1) - ts.at(s - 1) * lat.backward_step<T>(-1, s)) /
           lat.checked_forward_step<T>(-1, s);
  });
  const T lambda = shifted_constant<T>(
      lat, window, adj.lambda_star,
      [&](HalfInt s) {
        return (ts.at(s - 1) * lat.backward_step<T>(-1, s) - (ss.at(s) - ss.at(s - 1))) /
               lat.checked_backward_step<T>(0, s);
      },
      "reconstructed lambda");
  return {std::move(sigma), std::move(tau), lambda};
}

#define HYPERLAT_INSTANTIATE_ADJOINT(T)                                                          \
  template T sigma_star<T>(const HyperEquation&, HalfInt);                                      \
  template T tau_star<T>(const HyperEquation&, HalfInt);                                        \
  template AdjointCoefficients<T> adjoint_coeffs<T>(const HyperEquation&, const Window&);       \
  template GridFunction<T> apply_L_star<T>(const HyperEquation&, const GridFunction<T>&);       \
  template GridFunction<T> apply_L_star_rewritten<T>(const HyperEquation&, const GridFunction<T>&); \
  template PrimalCoefficients<T> reconstruct_primal<T>(const HyperEquation&, const Window&);

HYPERLAT_INSTANTIATE_ADJOINT(Rational)
HYPERLAT_INSTANTIATE_ADJOINT(double)

#undef HYPERLAT_INSTANTIATE_ADJOINT

}  // namespace hyperlat
