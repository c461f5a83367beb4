#include "hyperlat/grid_calculus.hpp"

#include <string>
#include <vector>

namespace hyperlat {

template <FieldScalar T>
GridFunction<T> delta_k(const Lattice& lat, std::int64_t k, const GridFunction<T>& f) {
  if (f.size() < 2) throw WindowTooSmall("delta_k needs at least 2 points, window " + f.window().str());
  std::vector<T> out;
  out.reserve(f.size() - 1);
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    const HalfInt s = f.start() + static_cast<std::int64_t>(j);
    out.push_back((f[j + 1] - f[j]) / lat.checked_forward_step<T>(k, s));
  }
  return GridFunction<T>(f.start(), std::move(out));
}

template <FieldScalar T>
GridFunction<T> nabla_k(const Lattice& lat, std::int64_t k, const GridFunction<T>& f) {
  if (f.size() < 2) throw WindowTooSmall("nabla_k needs at least 2 points, window " + f.window().str());
  std::vector<T> out;
  out.reserve(f.size() - 1);
  for (std::size_t j = 1; j < f.size(); ++j) {
    const HalfInt s = f.start() + static_cast<std::int64_t>(j);
    out.push_back((f[j] - f[j - 1]) / lat.checked_backward_step<T>(k, s));
  }
  return GridFunction<T>(f.start() + 1, std::move(out));
}

template <FieldScalar T>
GridFunction<T> iterated_delta(const Lattice& lat, std::int64_t k, int n, const GridFunction<T>& f) {
  if (n < 0) throw WindowTooSmall("iterated_delta: negative order");
  if (f.size() < static_cast<std::size_t>(n) + 1) {
    throw WindowTooSmall("iterated_delta of order " + std::to_string(n) + " needs " +
                         std::to_string(n + 1) + " points, window " + f.window().str());
  }
  GridFunction<T> g = f;
  for (int i = 0; i < n; ++i) g = delta_k(lat, k + i, g);
  return g;
}

template <FieldScalar T>
GridFunction<T> iterated_nabla(const Lattice& lat, std::int64_t k, int n, const GridFunction<T>& f) {
  if (n < 0) throw WindowTooSmall("iterated_nabla: negative order");
  if (f.size() < static_cast<std::size_t>(n) + 1) {
    throw WindowTooSmall("iterated_nabla of order " + std::to_string(n) + " needs " +
                         std::to_string(n + 1) + " points, window " + f.window().str());
  }
  GridFunction<T> g = f;
  for (int i = 0; i < n; ++i) g = nabla_k(lat, k - i, g);
  return g;
}

template <FieldScalar T>
T nabla_sum(const Lattice& lat, std::int64_t k, const GridFunction<T>& g, HalfInt N, HalfInt s) {
  const auto steps = unit_steps(N, s);
  if (!steps || *steps < 0 || !g.contains(N) || !g.contains(s)) {
    throw OutOfWindow("nabla_sum: range " + N.str() + ".." + s.str() + " not inside " + g.window().str());
  }
  T total(0);
  for (HalfInt t = N; t <= s; ++t) total = total + g.at(t) * lat.backward_step<T>(k, t);
  return total;
}

template <FieldScalar T>
GridFunction<T> cumulative_nabla_sum(const Lattice& lat, std::int64_t k, const GridFunction<T>& g,
                                     HalfInt N) {
  if (!g.contains(N)) throw OutOfWindow("cumulative_nabla_sum: base " + N.str() + " outside " + g.window().str());
  std::vector<T> out;
  T total(0);
  for (HalfInt t = N; t <= g.last(); ++t) {
    total = total + g.at(t) * lat.backward_step<T>(k, t);
    out.push_back(total);
  }
  return GridFunction<T>(N, std::move(out));
}

#define HYPERLAT_INSTANTIATE_CALCULUS(T)                                                        \
  template GridFunction<T> delta_k<T>(const Lattice&, std::int64_t, const GridFunction<T>&);    \
  template GridFunction<T> nabla_k<T>(const Lattice&, std::int64_t, const GridFunction<T>&);    \
  template GridFunction<T> iterated_delta<T>(const Lattice&, std::int64_t, int,                 \
                                             const GridFunction<T>&);                           \
  template GridFunction<T> iterated_nabla<T>(const Lattice&, std::int64_t, int,                 \
                                             const GridFunction<T>&);                           \
  template T nabla_sum<T>(const Lattice&, std::int64_t, const GridFunction<T>&, HalfInt, HalfInt); \
  template GridFunction<T> cumulative_nabla_sum<T>(const Lattice&, std::int64_t,                \
                                                   const GridFunction<T>&, HalfInt);

HYPERLAT_INSTANTIATE_CALCULUS(Rational)
HYPERLAT_INSTANTIATE_CALCULUS(double)

#undef HYPERLAT_INSTANTIATE_CALCULUS

}  // namespace hyperlat
