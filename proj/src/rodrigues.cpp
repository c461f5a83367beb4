#include "hyperlat/rodrigues.hpp"

#include <string>
#include <utility>

#include "hyperlat/errors.hpp"
#include "hyperlat/grid_calculus.hpp"
#include "hyperlat/linalg.hpp"

namespace hyperlat {

const char* to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::polynomial:
      return "polynomial";
    case SolutionKind::second_kind:
      return "second";
    case SolutionKind::generalized:
      return "generalized";
  }
  return "?";
}

Layout layout_for(const Window& output, std::int64_t n, std::optional<HalfInt> sum_base) {
  if (output.length < 1) throw WindowTooSmall("output window must be nonempty");
  if (n < 0) throw WindowTooSmall("n must be nonnegative");
  Layout l;
  l.output = output;
  l.solution = Window{output.start - 1, output.length + 2};
  l.source = Window{l.solution.start, l.solution.length + n};
  Window rho{l.source.start - 2, l.source.length + 4};
  const HalfInt N = sum_base.value_or(rho.start);
  const auto steps = unit_steps(N, l.source.start);
  if (!steps || *steps < 0) {
    throw OutOfWindow("sum base " + N.str() + " must be at most " + l.source.start.str() +
                      " and an integer number of steps from it");
  }
  if (N < rho.start) rho = Window{N, rho.length + *unit_steps(N, rho.start)};
  l.rho = rho;
  l.sum_base = N;
  return l;
}

template <FieldScalar T>
GridFunction<T> Y_n(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n, const Window& window) {
  return GridFunction<T>::sample(window, [&](HalfInt s) {
    T v = weight.rho.at(s);
    for (std::int64_t j = 0; j < n; ++j) v = v * sigma_of_s<T>(eq, s - j);
    return v;
  });
}

template <FieldScalar T>
GridFunction<T> from_Y(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                       const GridFunction<T>& v) {
  const GridFunction<T> d = iterated_delta(eq.lattice(), -n, static_cast<int>(n), v);
  return GridFunction<T>::sample(d.window(), [&](HalfInt s) { return d.at(s) / weight.rho.at(s); });
}

template <FieldScalar T>
GridFunction<T> rodrigues_nabla_form(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                                     const Window& window) {
  const auto rn = GridFunction<T>::sample(Window{window.start - n, window.length + n},
                                          [&](HalfInt t) { return rho_k<T>(eq, weight, n, t); });
  const GridFunction<T> d = iterated_nabla(eq.lattice(), n, static_cast<int>(n), rn);
  return GridFunction<T>::sample(d.window(), [&](HalfInt s) { return d.at(s) / weight.rho.at(s); });
}

template <FieldScalar T>
GridFunction<T> hat_Y_n(const HyperEquation& eq, const PearsonWeight<T>& weight, std::int64_t n,
                        const Window& window, HalfInt sum_base, const std::function<T(HalfInt)>& numerator) {
  const auto steps = unit_steps(sum_base, window.start);
  if (!steps || *steps < 0) {
    throw OutOfWindow("sum base " + sum_base.str() + " not usable for window " + window.str());
  }
  const Window range{sum_base, *steps + window.length};
  const auto g = GridFunction<T>::sample(range, [&](HalfInt t) {
    T den = weight.rho.at(t);
    for (std::int64_t j = 0; j <= n; ++j) den = den * sigma_of_s<T>(eq, t - j);
    if (is_zero(den)) throw SingularSummand(t.str());
    return numerator(t) / den;
  });
  const GridFunction<T> S = cumulative_nabla_sum(eq.lattice(), -n, g, sum_base).restricted(window);
  return Y_n<T>(eq, weight, n, window) * S;
}

template <FieldScalar T>
PearsonWeight<T> weight_for(const HyperEquation& eq, const Layout& layout) {
  return pearson_weight<T>(eq, layout.rho, layout.rho.start);
}

namespace {

template <FieldScalar T>
struct Prepared {
  HyperEquation eq;
  Layout layout;
  PearsonWeight<T> weight;
  Construction construction;
};

template <FieldScalar T>
Prepared<T> prepare(const HyperEquation& eq0, std::int64_t n, const Window& output, std::optional<HalfInt> sum_base,
                    const std::optional<PearsonWeight<T>>& weight) {
  const Rational ln = lambda_n<Rational>(eq0, n);
  HyperEquation eq = eq0.with_lambda(ln);
  Layout layout = layout_for(output, n, sum_base);
  PearsonWeight<T> w = weight ? *weight : weight_for<T>(eq, layout);
  if (!w.rho.contains(layout.rho.start) || !w.rho.contains(layout.rho.last())) {
    throw OutOfWindow("weight window " + w.rho.window().str() + " does not cover " + layout.rho.str());
  }
  Construction c;
  c.n = n;
  c.lambda_n = ln;
  c.layout = layout;
  c.inadmissible_at = first_inadmissible(eq.lattice(), eq.leading(), n);
  return {std::move(eq), layout, std::move(w), std::move(c)};
}

template <FieldScalar T>
SolutionReport<T> finish(const Prepared<T>& p, GridFunction<T> y, SolutionKind kind) {
  GridFunction<T> residual = apply_L(p.eq, y);
  return {std::move(y), kind, std::move(residual), p.construction};
}

}  // namespace

template <FieldScalar T>
SolutionReport<T> rodrigues_polynomial(const HyperEquation& eq, std::int64_t n, const Window& output,
                                       const std::optional<PearsonWeight<T>>& weight) {
  const Prepared<T> p = prepare<T>(eq, n, output, std::nullopt, weight);
  const GridFunction<T> Y = Y_n<T>(p.eq, p.weight, n, p.layout.source);
  return finish(p, from_Y<T>(p.eq, p.weight, n, Y), SolutionKind::polynomial);
}

template <FieldScalar T>
SolutionReport<T> second_solution(const HyperEquation& eq, std::int64_t n, const Window& output,
                                  std::optional<HalfInt> sum_base, const std::optional<PearsonWeight<T>>& weight) {
  const Prepared<T> p = prepare<T>(eq, n, output, sum_base, weight);
  const GridFunction<T> Y =
      hat_Y_n<T>(p.eq, p.weight, n, p.layout.source, p.layout.sum_base, [](HalfInt) { return T(1); });
  return finish(p, from_Y<T>(p.eq, p.weight, n, Y), SolutionKind::second_kind);
}

template <FieldScalar T>
SolutionReport<T> generalized_solution(const HyperEquation& eq, std::int64_t n, const Window& output,
                                       const std::vector<Rational>& P, std::optional<HalfInt> sum_base,
                                       const std::optional<PearsonWeight<T>>& weight) {
  if (P.size() != static_cast<std::size_t>(n + 1)) {
    throw ConsistencyError("P must have n+1 = " + std::to_string(n + 1) + " coefficients, got " +
                           std::to_string(P.size()));
  }
  Prepared<T> p = prepare<T>(eq, n, output, sum_base, weight);
  p.construction.P = P;
  const Lattice& lat = p.eq.lattice();
  const GridFunction<T> Y = hat_Y_n<T>(p.eq, p.weight, n, p.layout.source, p.layout.sum_base, [&](HalfInt t) {
    const T x = lat.x<T>(-(n + 1), t);
    T v(0);
    for (auto it = P.rbegin(); it != P.rend(); ++it) v = v * x + from_rational<T>(*it);
    return v;
  });
  return finish(p, from_Y<T>(p.eq, p.weight, n, Y), SolutionKind::generalized);
}

template <FieldScalar T>
T first_order_p0(const HyperEquation& eq, std::int64_t n, HalfInt s) {
  const Lattice& lat = eq.lattice();
  const T num = sigma_of_s<T>(eq, s - 1) - sigma_of_s<T>(eq, s - n) +
                tau_of_s<T>(eq, s - 1) * lat.backward_step<T>(-1, s);
  return num / lat.checked_backward_step<T>(-n, s);
}

template <FieldScalar T>
LadderAuxiliaries<T> gamma_ell_eta(const HyperEquation& eq, std::int64_t n, HalfInt s) {
  const Lattice& lat = eq.lattice();
  auto sstar = [&](HalfInt t) {
    return sigma_of_s<T>(eq, t - 1) + tau_of_s<T>(eq, t - 1) * lat.backward_step<T>(-1, t);
  };
  auto ell = [&](HalfInt t) {
    return (sigma_of_s<T>(eq, t - n) - sstar(t)) / lat.checked_backward_step<T>(-n, t);
  };
  // Δx_{-n}(s − 1/2) = x(s + (1−n)/2) − x(s − (1+n)/2) = ∇x_{1−n}(s)
  const T gamma = (sigma_of_s<T>(eq, s - n + 1) - sstar(s)) / lat.checked_backward_step<T>(1 - n, s);
  const T l = ell(s);
  const T eta = (ell(s + 1) - l) / lat.checked_forward_step<T>(-(n + 1), s);
  return {gamma, l, eta};
}

std::vector<Rational> brute_force_polynomial_oracle(const HyperEquation& eq0, std::int64_t n, HalfInt first) {
  const HyperEquation eq = eq0.with_lambda(lambda_n<Rational>(eq0, n));
  const Lattice& lat = eq.lattice();
  const auto cols = static_cast<std::size_t>(n + 1);
  const auto rows = static_cast<std::size_t>(n + 2);
  RationalMatrix m(rows, cols);
  const Window samples{first - 1, n + 4};
  for (std::size_t j = 0; j < cols; ++j) {
    const auto f = GridFunction<Rational>::sample(
        samples, [&](HalfInt s) { return rat_pow(lat.x<Rational>(0, s), static_cast<std::int64_t>(j)); });
    const auto r = apply_L(eq, f);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = r[i];
  }
  auto ns = null_space(m);
  if (ns.size() != 1) {
    throw OracleDimensionError("polynomial oracle null space has dimension " + std::to_string(ns.size()) +
                               " for n = " + std::to_string(n));
  }
  std::vector<Rational> c = std::move(ns[0]);
  std::size_t top = c.size();
  while (top > 0 && c[top - 1].is_zero()) --top;
  const Rational lead = c[top - 1];
  for (auto& v : c) v /= lead;
  return c;
}

std::vector<Rational> polynomial_coefficients(const Lattice& lat, const GridFunction<Rational>& y, std::int64_t n) {
  const auto size = static_cast<std::size_t>(n + 1);
  if (y.size() < size) throw WindowTooSmall("interpolation needs n+1 samples");
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < size; ++i) {
    const HalfInt s = y.start() + static_cast<std::int64_t>(i);
    xs.push_back(lat.x<Rational>(0, s));
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[j] == xs[i]) throw DegenerateStep(0, s.str() + " (repeated abscissa)");
    }
  }
  RationalMatrix v(size, size);
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < size; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < size; ++j) {
      v(i, j) = p;
      p *= xs[i];
    }
    rhs.push_back(y[i]);
  }
  return solve(std::move(v), std::move(rhs));
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const Rational r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

#define HYPERLAT_INSTANTIATE_RODRIGUES(T)                                                                   \
  template GridFunction<T> Y_n<T>(const HyperEquation&, const PearsonWeight<T>&, std::int64_t, const Window&); \
  template GridFunction<T> from_Y<T>(const HyperEquation&, const PearsonWeight<T>&, std::int64_t,             \
                                     const GridFunction<T>&);                                                 \
  template GridFunction<T> rodrigues_nabla_form<T>(const HyperEquation&, const PearsonWeight<T>&,             \
                                                   std::int64_t, const Window&);                              \
  template GridFunction<T> hat_Y_n<T>(const HyperEquation&, const PearsonWeight<T>&, std::int64_t,            \
                                      const Window&, HalfInt, const std::function<T(HalfInt)>&);              \
  template PearsonWeight<T> weight_for<T>(const HyperEquation&, const Layout&);                               \
  template SolutionReport<T> rodrigues_polynomial<T>(const HyperEquation&, std::int64_t, const Window&,        \
                                                     const std::optional<PearsonWeight<T>>&);                 \
  template SolutionReport<T> second_solution<T>(const HyperEquation&, std::int64_t, const Window&,             \
                                                std::optional<HalfInt>, const std::optional<PearsonWeight<T>>&); \
  template SolutionReport<T> generalized_solution<T>(const HyperEquation&, std::int64_t, const Window&,        \
                                                     const std::vector<Rational>&, std::optional<HalfInt>,    \
                                                     const std::optional<PearsonWeight<T>>&);                 \
  template T first_order_p0<T>(const HyperEquation&, std::int64_t, HalfInt);                                  \
  template LadderAuxiliaries<T> gamma_ell_eta<T>(const HyperEquation&, std::int64_t, HalfInt);

HYPERLAT_INSTANTIATE_RODRIGUES(Rational)
HYPERLAT_INSTANTIATE_RODRIGUES(double)

#undef HYPERLAT_INSTANTIATE_RODRIGUES

}  // namespace hyperlat
