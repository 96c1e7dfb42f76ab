#include "sbgeo/disc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "sbgeo/error.hpp"

namespace sbgeo {

namespace {

void require_away_from_boundary(Complex z, const char* what) {
  if (1.0 - std::abs(z) < kBoundaryGuard) {
    std::ostringstream msg;
    msg << what << ": point " << z << " is within " << kBoundaryGuard
        << " of the unit circle";
    throw Error(ErrorKind::Domain, msg.str());
  }
}

Complex checked_unimodular(Complex tau, const char* what) {
  const double r = std::abs(tau);
  if (!std::isfinite(r) || std::abs(r - 1.0) > kTolUnimodular) {
    std::ostringstream msg;
    msg << what << ": factor " << tau << " is not unimodular";
    throw Error(ErrorKind::Domain, msg.str());
  }
  return tau / r;
}

}  // namespace

DiscPoint::DiscPoint(Complex value) : value_(value) {
  if (!(std::abs(value) < 1.0)) {
    std::ostringstream msg;
    msg << "point " << value << " is not in the open unit disc";
    throw Error(ErrorKind::Domain, msg.str());
  }
}

DiscAutomorphism::DiscAutomorphism(Complex tau, Complex alpha)
    : tau_(checked_unimodular(tau, "DiscAutomorphism")), alpha_(alpha) {
  if (!(std::abs(alpha) < 1.0)) {
    std::ostringstream msg;
    msg << "DiscAutomorphism: zero " << alpha << " is not inside the disc";
    throw Error(ErrorKind::Domain, msg.str());
  }
}

Complex DiscAutomorphism::operator()(Complex lambda) const {
  return tau_ * (lambda - alpha_) / (1.0 - std::conj(alpha_) * lambda);
}

DiscAutomorphism compose(const DiscAutomorphism& h, const DiscAutomorphism& g) {
  // Each map acts as the matrix [[tau, -tau*alpha], [-conj(alpha), 1]].
  const Complex h00 = h.tau(), h01 = -h.tau() * h.alpha();
  const Complex h10 = -std::conj(h.alpha()), h11 = 1.0;
  const Complex g00 = g.tau(), g01 = -g.tau() * g.alpha();
  const Complex g10 = -std::conj(g.alpha()), g11 = 1.0;
  const Complex p00 = h00 * g00 + h01 * g10;
  const Complex p01 = h00 * g01 + h01 * g11;
  const Complex p11 = h10 * g01 + h11 * g11;
  const Complex tau = p00 / p11;
  return {tau / std::abs(tau), -p01 / p00};
}

DiscAutomorphism invert(const DiscAutomorphism& h) {
  return {std::conj(h.tau()), -h.tau() * h.alpha()};
}

BlaschkeProduct::BlaschkeProduct(Complex tau, std::vector<Complex> zeros)
    : tau_(checked_unimodular(tau, "BlaschkeProduct")),
      zeros_(std::move(zeros)) {
  for (const Complex& a : zeros_) {
    if (!(std::abs(a) < 1.0)) {
      std::ostringstream msg;
      msg << "BlaschkeProduct: zero " << a << " is not inside the disc";
      throw Error(ErrorKind::Domain, msg.str());
    }
  }
}

Complex BlaschkeProduct::eval(Complex lambda) const {
  if (std::abs(lambda) > 1.0 + kTolUnimodular) {
    std::ostringstream msg;
    msg << "BlaschkeProduct: evaluation point " << lambda
        << " lies outside the closed disc";
    throw Error(ErrorKind::Domain, msg.str());
  }
  Complex value = tau_;
  for (const Complex& a : zeros_) {
    value *= (lambda - a) / (1.0 - std::conj(a) * lambda);
  }
  return value;
}

double mobius_distance(DiscPoint a, DiscPoint b) {
  require_away_from_boundary(a.value(), "mobius_distance");
  require_away_from_boundary(b.value(), "mobius_distance");
  return detail::mobius_unchecked(a.value(), b.value());
}

double poincare_distance(DiscPoint a, DiscPoint b) {
  return std::atanh(mobius_distance(a, b));
}

DiscAutomorphism automorphism_through(DiscPoint a, DiscPoint b, DiscPoint c,
                                      DiscPoint d, double tol) {
  if (a.value() == b.value()) {
    throw Error(ErrorKind::Degenerate,
                "automorphism_through: source points coincide");
  }
  const double m_src = mobius_distance(a, b);
  const double m_dst = mobius_distance(c, d);
  if (std::abs(m_src - m_dst) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "automorphism_through: pseudo-hyperbolic distances differ ("
        << m_src << " vs " << m_dst << ")";
    throw Error(ErrorKind::Infeasible, msg.str());
  }
  // Center both frames at the first point, then rotate b's image onto d's.
  const DiscAutomorphism center_src(1.0, a.value());
  const DiscAutomorphism center_dst(1.0, c.value());
  const Complex u = center_src(b.value());
  const Complex v = center_dst(d.value());
  Complex rho = 1.0;
  if (std::abs(v) > 0.0) rho = (v / std::abs(v)) / (u / std::abs(u));
  return compose(invert(center_dst),
                 compose(DiscAutomorphism::rotation(rho / std::abs(rho)),
                         center_src));
}

BlaschkeProduct blaschke_interpolate_origin(double sigma, Complex t1,
                                            Complex t2, double tol) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw Error(ErrorKind::Domain,
                "blaschke_interpolate_origin: sigma must lie in (0, 1)");
  }
  if (std::abs(t1 + t2) <= tol && std::abs(std::abs(t1) - sigma) <= tol) {
    const Complex tau = (t1 - t2) / (2.0 * sigma);
    return {tau / std::abs(tau), {Complex(0.0)}};
  }
  if (!(std::abs(t1) < sigma && std::abs(t2) < sigma)) {
    throw Error(ErrorKind::Infeasible,
                "blaschke_interpolate_origin: values must satisfy |t| < sigma");
  }
  const DiscAutomorphism h =
      automorphism_through(sigma, -sigma, t1 / sigma, -t2 / sigma, tol);
  return {h.tau(), {Complex(0.0), h.alpha()}};
}

namespace detail {

double mobius_unchecked(Complex a, Complex b) {
  const double m = std::abs((a - b) / (1.0 - std::conj(a) * b));
  return std::clamp(m, 0.0, 1.0);
}

std::pair<Complex, Complex> stable_quadratic_roots(Complex a, Complex b,
                                                   Complex c) {
  Complex disc = std::sqrt(b * b - 4.0 * a * c);
  if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
  const Complex q = -0.5 * (b + disc);
  if (q == 0.0) return {0.0, 0.0};
  return {q / a, c / q};
}

}  // namespace detail

}  // namespace sbgeo
