#include "sbgeo/bidisc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sbgeo/error.hpp"

namespace sbgeo {

Complex random_disc_point(Rng& rng, double r) {
  const double radius = r * std::sqrt(uniform01(rng));
  const double angle = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(radius, angle);
}

Complex random_unimodular(Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
}

ExtremalParam ExtremalParam::unit(Complex omega) {
  const double r = std::abs(omega);
  if (std::abs(r - 1.0) > kTolUnimodular) {
    std::ostringstream msg;
    msg << "ExtremalParam: omega " << omega << " is neither 0 nor unimodular";
    throw Error(ErrorKind::Domain, msg.str());
  }
  return ExtremalParam(omega / r);
}

ExtremalParam ExtremalParam::from_angle(double theta) {
  return ExtremalParam(std::polar(1.0, theta));
}

ExtremalParam ExtremalParam::make(Complex omega) {
  if (omega == 0.0) return zero();
  return unit(omega);
}

SymPoint pi2(Complex l1, Complex l2) { return {l1 + l2, l1 * l2}; }

Lift lift(const SymPoint& z) {
  auto [r1, r2] = detail::stable_quadratic_roots(1.0, -z.s, z.p);
  auto less = [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  if (less(r2, r1)) std::swap(r1, r2);
  return {r1, r2};
}

Membership contains(const SymPoint& z) {
  Membership m;
  m.lift = lift(z);
  m.margin = 1.0 - std::max(std::abs(m.lift.l1), std::abs(m.lift.l2));
  m.inside = m.margin > 0.0;
  return m;
}

bool on_royal_variety(const SymPoint& z, double tol) {
  return std::abs(z.s * z.s - 4.0 * z.p) <= tol && std::abs(z.s) < 2.0;
}

SymPoint RoyalAutomorphism::operator()(const SymPoint& z) const {
  const DiscAutomorphism b = DiscAutomorphism::b_alpha(alpha_);
  const Lift l = lift(z);
  return pi2(b(l.l1), b(l.l2));
}

DiscPoint extremal_eval(const ExtremalParam& omega, const SymPoint& z) {
  if (!contains(z).inside) {
    std::ostringstream msg;
    msg << "extremal_eval: (" << z.s << ", " << z.p << ") is not in G2";
    throw Error(ErrorKind::Domain, msg.str());
  }
  return detail::extremal_unchecked(omega.omega(), z);
}

SymPoint random_interior_point(Rng& rng, double r_max) {
  const Complex a = random_disc_point(rng, r_max);
  const Complex b = random_disc_point(rng, r_max);
  return pi2(a, b);
}

SymPoint random_interior_point(std::uint64_t seed, double r_max) {
  Rng rng(seed);
  return random_interior_point(rng, r_max);
}

}  // namespace sbgeo
