#include "hyperlat/hyper_equation.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/grid_calculus.hpp"

namespace hyperlat {

HyperEquation::HyperEquation(Lattice lattice, std::array<Rational, 3> sigma, std::array<Rational, 2> tau,
                             Rational lambda)
    : lattice_(std::move(lattice)), sigma_(std::move(sigma)), tau_(std::move(tau)), lambda_(std::move(lambda)) {}

HyperEquation HyperEquation::with_lambda(Rational lambda) const {
  return HyperEquation(lattice_, sigma_, tau_, std::move(lambda));
}

namespace {

template <FieldScalar T>
bool agree(const T& a, const T& b) {
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    return ScalarTraits<T>::near(a, b, 1e-9);
  }
}

// Value at x of the polynomial through (xs[i], ys[i]).
template <FieldScalar T>
T lagrange(const std::vector<T>& xs, const std::vector<T>& ys, const T& x, int level, HalfInt where) {
  T total(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    T term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      const T d = xs[i] - xs[j];
      if (is_zero(d)) throw DegenerateStep(level, where.str() + " (interpolation nodes coincide)");
      term = term * (x - xs[j]) / d;
    }
    total = total + term;
  }
  return total;
}

}  // namespace

template <FieldScalar T>
T sigma_of_s(const HyperEquation& eq, HalfInt s) {
  const Lattice& lat = eq.lattice();
  const T x = lat.x<T>(0, s);
  return eq.sigma_tilde<T>(x) - eq.tau_tilde<T>(x) * lat.backward_step<T>(1, s) / T(2);
}

template <FieldScalar T>
T tau_of_s(const HyperEquation& eq, HalfInt s) {
  return eq.tau_tilde<T>(eq.lattice().x<T>(0, s));
}

template <FieldScalar T>
T tau_k(const HyperEquation& eq, std::int64_t k, HalfInt s) {
  const Lattice& lat = eq.lattice();
  const HalfInt sk = s + k;
  const T num = sigma_of_s<T>(eq, sk) - sigma_of_s<T>(eq, s) + tau_of_s<T>(eq, sk) * lat.backward_step<T>(1, sk);
  return num / lat.checked_backward_step<T>(k + 1, s);
}

template <FieldScalar T>
T sigma_tilde_nu(const HyperEquation& eq, std::int64_t nu, HalfInt s) {
  return sigma_of_s<T>(eq, s) + tau_k<T>(eq, nu, s) * eq.lattice().backward_step<T>(nu + 1, s) / T(2);
}

template <FieldScalar T>
T sigma_k(const HyperEquation& eq, std::int64_t k, HalfInt s) {
  // sigma~_k is fitted as a quadratic and tau_k as a line in x_k from samples
  // at s+1, s+2, s+3, then both are evaluated at x_k(s). This tests the degree
  // claims rather than restating the definition.
  const Lattice& lat = eq.lattice();
  std::vector<T> xs;
  std::vector<T> st;
  std::vector<T> tk;
  for (std::int64_t i = 1; i <= 3; ++i) {
    xs.push_back(lat.x<T>(k, s + i));
    st.push_back(sigma_tilde_nu<T>(eq, k, s + i));
    tk.push_back(tau_k<T>(eq, k, s + i));
  }
  const T x = lat.x<T>(k, s);
  const T st_at = lagrange<T>(xs, st, x, static_cast<int>(k), s);
  const std::vector<T> xs2(xs.begin(), xs.begin() + 2);
  const std::vector<T> tk2(tk.begin(), tk.begin() + 2);
  const T tk_at = lagrange<T>(xs2, tk2, x, static_cast<int>(k), s);
  return st_at - tk_at * lat.backward_step<T>(k + 1, s) / T(2);
}

template <FieldScalar T>
T mu_k(const HyperEquation& eq, std::int64_t k) {
  const Lattice& lat = eq.lattice();
  const LeadingCoefficients c = eq.leading();
  return from_rational<T>(eq.lambda()) + kappa<T>(lat, c.sigma2, c.tau1, k) * lat.nu<T>(k);
}

template <FieldScalar T>
T mu_k_by_differences(const HyperEquation& eq, std::int64_t k, HalfInt s) {
  const Lattice& lat = eq.lattice();
  auto step = [&](std::int64_t j) {
    return (tau_k<T>(eq, j, s + 1) - tau_k<T>(eq, j, s)) / lat.checked_forward_step<T>(j, s);
  };
  T total = from_rational<T>(eq.lambda());
  for (std::int64_t j = 0; j < k; ++j) total = total + step(j);
  for (std::int64_t j = k; j < 0; ++j) total = total - step(j);
  return total;
}

template <FieldScalar T>
T lambda_n(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n) {
  return -(kappa<T>(lat, c.sigma2, c.tau1, n) * lat.nu<T>(n));
}

std::optional<std::int64_t> first_inadmissible(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n) {
  const Rational target = lambda_n<Rational>(lat, c, n);
  for (std::int64_t m = 0; m < n; ++m) {
    if (lambda_n<Rational>(lat, c, m) == target) return m;
  }
  return std::nullopt;
}

template <FieldScalar T>
PearsonWeight<T> pearson_weight(const HyperEquation& eq, const Window& window, HalfInt anchor) {
  if (window.length < 1) throw WindowTooSmall("Pearson weight needs a nonempty window");
  if (!window.contains(anchor)) {
    throw OutOfWindow("Pearson anchor " + anchor.str() + " outside " + window.str());
  }
  const Lattice& lat = eq.lattice();
  // rho(s+1) / rho(s) = up(s) / sigma(s+1)
  auto up = [&](HalfInt s) { return sigma_of_s<T>(eq, s) + tau_of_s<T>(eq, s) * lat.backward_step<T>(1, s); };

  const auto n = static_cast<std::size_t>(window.length);
  const auto a = static_cast<std::size_t>(*unit_steps(window.start, anchor));
  std::vector<T> rho(n, T(0));
  rho[a] = T(1);
  for (std::size_t j = a; j + 1 < n; ++j) {
    const HalfInt s = window.at(static_cast<std::int64_t>(j));
    const T num = up(s);
    const T den = sigma_of_s<T>(eq, s + 1);
    if (is_zero(den)) throw PearsonSingularity((s + 1).str());
    if (is_zero(num)) throw PearsonSingularity(s.str());
    rho[j + 1] = rho[j] * num / den;
  }
  for (std::size_t j = a; j > 0; --j) {
    const HalfInt s = window.at(static_cast<std::int64_t>(j) - 1);
    const T num = up(s);
    const T den = sigma_of_s<T>(eq, s + 1);
    if (is_zero(den)) throw PearsonSingularity((s + 1).str());
    if (is_zero(num)) throw PearsonSingularity(s.str());
    rho[j - 1] = rho[j] * den / num;
  }
  return {GridFunction<T>(window.start, std::move(rho)), anchor};
}

template <FieldScalar T>
T rho_k(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t k, HalfInt s) {
  T value = weight.rho.at(s + k);
  for (std::int64_t i = 1; i <= k; ++i) value = value * sigma_of_s<T>(eq, s + i);
  return value;
}

template <FieldScalar T>
GridFunction<T> apply_L(const HyperEquation& eq, const GridFunction<T>& y) {
  if (y.size() < 3) throw WindowTooSmall("L[y] needs at least 3 points, window " + y.window().str());
  const Lattice& lat = eq.lattice();
  const Window inner{y.start() + 1, static_cast<std::int64_t>(y.size()) - 2};
  const GridFunction<T> second = delta_k(lat, -1, nabla_k(lat, 0, y));
  const GridFunction<T> first = delta_k(lat, 0, y).restricted(inner);
  const T lambda = from_rational<T>(eq.lambda());
  return GridFunction<T>::sample(inner, [&](HalfInt s) {
    return sigma_of_s<T>(eq, s) * second.at(s) + tau_of_s<T>(eq, s) * first.at(s) + lambda * y.at(s);
  });
}

template <FieldScalar T>
GridFunction<T> apply_self_adjoint(const HyperEquation& eq, const PearsonWeight<T>& weight,
                                   const GridFunction<T>& y) {
  if (y.size() < 3) throw WindowTooSmall("self-adjoint form needs at least 3 points, window " + y.window().str());
  const Lattice& lat = eq.lattice();
  const GridFunction<T> grad = nabla_k(lat, 0, y);
  const GridFunction<T> flux =
      GridFunction<T>::sample(grad.window(), [&](HalfInt s) { return sigma_of_s<T>(eq, s) * weight.rho.at(s) * grad.at(s); });
  const GridFunction<T> div = delta_k(lat, -1, flux);
  const T lambda = from_rational<T>(eq.lambda());
  return GridFunction<T>::sample(div.window(),
                                 [&](HalfInt s) { return div.at(s) + lambda * weight.rho.at(s) * y.at(s); });
}

template <FieldScalar T>
T sigma_tilde_star(const HyperEquation& eq, HalfInt s) {
  return sigma_of_s<T>(eq, s + 1) + tau_k<T>(eq, -2, s + 1) * eq.lattice().backward_step<T>(-1, s + 1) / T(2);
}

template <FieldScalar T>
T hat_tau_k(const HyperEquation& eq, std::int64_t n, std::int64_t k, HalfInt s) {
  const Lattice& lat = eq.lattice();
  const T sigma_star = sigma_of_s<T>(eq, s - 1) + tau_of_s<T>(eq, s - 1) * lat.backward_step<T>(-1, s);
  // x_{-n}(s + (k+1)/2) − x_{-n}(s + (k−1)/2) = ∇x_{k+1−n}(s)
  return (sigma_of_s<T>(eq, s - n + k + 1) - sigma_star) / lat.checked_backward_step<T>(k + 1 - n, s);
}

template <FieldScalar T>
T hat_tau_k_via_ladder(const HyperEquation& eq, std::int64_t n, std::int64_t k, HalfInt s) {
  return -tau_k<T>(eq, n - k - 2, s - n + k + 1);
}

template <FieldScalar T>
T hat_mu_n(const Lattice& lat, const LeadingCoefficients& c, std::int64_t n) {
  const T a = -(kappa<T>(lat, c.sigma2, c.tau1, n - 1) * lat.nu<T>(n + 1));
  const T b = -kappa<T>(lat, c.sigma2, c.tau1, -1) - kappa<T>(lat, c.sigma2, c.tau1, n) * lat.nu<T>(n);
  if (!agree(a, b)) {
    throw ConsistencyError("hat_mu_n closed forms disagree at n = " + std::to_string(n) + ": " +
                           ScalarTraits<T>::text(a) + " vs " + ScalarTraits<T>::text(b));
  }
  return a;
}

template <FieldScalar T>
T hat_mu_n_by_differences(const HyperEquation& eq, std::int64_t n, HalfInt s) {
  const Lattice& lat = eq.lattice();
  T total(0);
  for (std::int64_t k = -1; k <= n - 1; ++k) {
    total = total + (hat_tau_k<T>(eq, n, k, s + 1) - hat_tau_k<T>(eq, n, k, s)) /
                        lat.checked_forward_step<T>(k - n, s);
  }
  return total;
}

#define HYPERLAT_INSTANTIATE_EQUATION(T)                                                              \
  template T sigma_of_s<T>(const HyperEquation&, HalfInt);                                           \
  template T tau_of_s<T>(const HyperEquation&, HalfInt);                                             \
  template T tau_k<T>(const HyperEquation&, std::int64_t, HalfInt);                                  \
  template T sigma_tilde_nu<T>(const HyperEquation&, std::int64_t, HalfInt);                         \
  template T sigma_k<T>(const HyperEquation&, std::int64_t, HalfInt);                                \
  template T mu_k<T>(const HyperEquation&, std::int64_t);                                            \
  template T mu_k_by_differences<T>(const HyperEquation&, std::int64_t, HalfInt);                    \
  template T lambda_n<T>(const Lattice&, const LeadingCoefficients&, std::int64_t);                  \
  template PearsonWeight<T> pearson_weight<T>(const HyperEquation&, const Window&, HalfInt);         \
  template T rho_k<T>(const HyperEquation&, const PearsonWeight<T>&, std::int64_t, HalfInt);         \
  template GridFunction<T> apply_L<T>(const HyperEquation&, const GridFunction<T>&);                 \
  template GridFunction<T> apply_self_adjoint<T>(const HyperEquation&, const PearsonWeight<T>&,      \
                                                 const GridFunction<T>&);                            \
  template T sigma_tilde_star<T>(const HyperEquation&, HalfInt);                                     \
  template T hat_tau_k<T>(const HyperEquation&, std::int64_t, std::int64_t, HalfInt);                \
  template T hat_tau_k_via_ladder<T>(const HyperEquation&, std::int64_t, std::int64_t, HalfInt);     \
  template T hat_mu_n<T>(const Lattice&, const LeadingCoefficients&, std::int64_t);                  \
  template T hat_mu_n_by_differences<T>(const HyperEquation&, std::int64_t, HalfInt);

HYPERLAT_INSTANTIATE_EQUATION(Rational)
HYPERLAT_INSTANTIATE_EQUATION(double)

#undef HYPERLAT_INSTANTIATE_EQUATION

}  // namespace hyperlat
