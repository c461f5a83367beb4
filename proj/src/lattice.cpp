#include "hyperlat/lattice.hpp"

#include <utility>

namespace hyperlat {

const char* to_string(LatticeFamily f) {
  return f == LatticeFamily::q_quadratic ? "qquadratic" : "quadratic";
}

Lattice Lattice::q_quadratic(Rational p, Rational c1, Rational c2, Rational c3, bool allow_degenerate) {
  if (p.is_zero() || p == Rational(1) || p == Rational(-1)) {
    throw InvalidLattice("p must not be 0, 1, or -1");
  }
  Lattice lat;
  lat.family_ = LatticeFamily::q_quadratic;
  lat.p_ = std::move(p);
  lat.c_ = {std::move(c1), std::move(c2), std::move(c3)};
  lat.allow_degenerate_ = allow_degenerate;
  if (!lat.is_nonuniform() && !allow_degenerate) {
    throw InvalidLattice("degenerate q-quadratic lattice (c1*c2 = 0) requires allow_degenerate");
  }
  return lat;
}

Lattice Lattice::quadratic(Rational ct1, Rational ct2, Rational ct3, bool allow_degenerate) {
  Lattice lat;
  lat.family_ = LatticeFamily::quadratic;
  lat.c_ = {std::move(ct1), std::move(ct2), std::move(ct3)};
  lat.allow_degenerate_ = allow_degenerate;
  if (!lat.is_nonuniform() && !allow_degenerate) {
    throw InvalidLattice("degenerate quadratic lattice (ct1 = 0) requires allow_degenerate");
  }
  return lat;
}

bool Lattice::is_nonuniform() const {
  if (family_ == LatticeFamily::q_quadratic) return !(c_[0] * c_[1]).is_zero();
  return !c_[0].is_zero();
}

bool Lattice::meets_strict_definition() const { return !(c_[0] * c_[1]).is_zero(); }

template <FieldScalar T>
T Lattice::x(std::int64_t k, HalfInt s) const {
  const std::int64_t e = s.twice() + k;  // 2(s + k/2)
  if (family_ == LatticeFamily::q_quadratic) {
    const T pw = ipow<T>(from_rational<T>(p_), e);
    return from_rational<T>(c_[0]) * pw + from_rational<T>(c_[1]) / pw + from_rational<T>(c_[2]);
  }
  const T u = T(static_cast<long>(e)) / T(2);
  return (from_rational<T>(c_[0]) * u + from_rational<T>(c_[1])) * u + from_rational<T>(c_[2]);
}

template <FieldScalar T>
T Lattice::checked_forward_step(std::int64_t k, HalfInt s) const {
  T d = forward_step<T>(k, s);
  if (is_zero(d)) throw DegenerateStep(static_cast<int>(k), s.str() + " (forward)");
  return d;
}

template <FieldScalar T>
T Lattice::checked_backward_step(std::int64_t k, HalfInt s) const {
  T d = backward_step<T>(k, s);
  if (is_zero(d)) throw DegenerateStep(static_cast<int>(k), s.str() + " (backward)");
  return d;
}

template <FieldScalar T>
T Lattice::nu(std::int64_t mu) const {
  if (family_ == LatticeFamily::quadratic) return T(static_cast<long>(mu));
  const T p = from_rational<T>(p_);
  const T pm = ipow<T>(p, mu);
  return (pm - T(1) / pm) / (p - T(1) / p);
}

template <FieldScalar T>
T Lattice::alpha(std::int64_t mu) const {
  if (family_ == LatticeFamily::quadratic) return T(1);
  const T pm = ipow<T>(from_rational<T>(p_), mu);
  return (pm + T(1) / pm) / T(2);
}

Rational Lattice::beta() const {
  const Rational x0 = x<Rational>(0, 0);
  const Rational x1 = x<Rational>(0, 1);
  return (x1 + x0) / 2 - alpha<Rational>(1) * x<Rational>(1, 0);
}

template <FieldScalar T>
T kappa(const Lattice& lat, const Rational& sigma2, const Rational& tau1, std::int64_t mu) {
  return lat.alpha<T>(mu - 1) * from_rational<T>(tau1) +
         lat.nu<T>(mu - 1) * from_rational<T>(sigma2) / T(2);
}

template <FieldScalar T>
KappaTable<T>::KappaTable(const Lattice& lat, const Rational& sigma2, const Rational& tau1,
                          std::int64_t max_index)
    : lat_(&lat), sigma2_(sigma2), tau1_(tau1), max_index_(max_index) {
  const auto size = static_cast<std::size_t>(2 * max_index + 1);
  nu_.reserve(size);
  alpha_.reserve(size);
  kappa_.reserve(size);
  for (std::int64_t mu = -max_index; mu <= max_index; ++mu) {
    nu_.push_back(lat.nu<T>(mu));
    alpha_.push_back(lat.alpha<T>(mu));
    kappa_.push_back(hyperlat::kappa<T>(lat, sigma2, tau1, mu));
  }
}

template <FieldScalar T>
T KappaTable<T>::nu(std::int64_t mu) const {
  if (mu < -max_index_ || mu > max_index_) return lat_->nu<T>(mu);
  return nu_[static_cast<std::size_t>(mu + max_index_)];
}

template <FieldScalar T>
T KappaTable<T>::alpha(std::int64_t mu) const {
  if (mu < -max_index_ || mu > max_index_) return lat_->alpha<T>(mu);
  return alpha_[static_cast<std::size_t>(mu + max_index_)];
}

template <FieldScalar T>
T KappaTable<T>::kappa(std::int64_t mu) const {
  if (mu < -max_index_ || mu > max_index_) return hyperlat::kappa<T>(*lat_, sigma2_, tau1_, mu);
  return kappa_[static_cast<std::size_t>(mu + max_index_)];
}

#define HYPERLAT_INSTANTIATE_LATTICE(T)                                                   \
  template T Lattice::x<T>(std::int64_t, HalfInt) const;                                 \
  template T Lattice::checked_forward_step<T>(std::int64_t, HalfInt) const;              \
  template T Lattice::checked_backward_step<T>(std::int64_t, HalfInt) const;             \
  template T Lattice::nu<T>(std::int64_t) const;                                         \
  template T Lattice::alpha<T>(std::int64_t) const;                                      \
  template T kappa<T>(const Lattice&, const Rational&, const Rational&, std::int64_t);   \
  template class KappaTable<T>;

HYPERLAT_INSTANTIATE_LATTICE(Rational)
HYPERLAT_INSTANTIATE_LATTICE(double)

#undef HYPERLAT_INSTANTIATE_LATTICE

}  // namespace hyperlat
