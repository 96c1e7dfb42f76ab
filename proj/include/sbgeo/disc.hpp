#pragma once

// Hyperbolic geometry of the unit disc: pseudo-hyperbolic and Poincare
// distances, Mobius self-maps and finite Blaschke products.

#include <complex>
#include <vector>

namespace sbgeo {

using Complex = std::complex<double>;

/// Interpolation feasibility tolerance on matched pseudo-hyperbolic distances.
inline constexpr double kTolInterp = 1e-9;
/// Tolerance on |tau| = 1 for unimodular factors.
inline constexpr double kTolUnimodular = 1e-12;
/// Distance operations reject points with 1 - |z| below this.
inline constexpr double kBoundaryGuard = 1e-12;

/// A point of the open unit disc. Construction throws a domain error when
/// |value| >= 1.
class DiscPoint {
 public:
  DiscPoint(Complex value);  // NOLINT(google-explicit-constructor)
  DiscPoint(double value) : DiscPoint(Complex(value, 0.0)) {}  // NOLINT

  Complex value() const noexcept { return value_; }

 private:
  Complex value_;
};

/// lambda -> tau * (lambda - alpha) / (1 - conj(alpha) * lambda).
class DiscAutomorphism {
 public:
  /// Throws a domain error unless |tau| = 1 (within kTolUnimodular) and
  /// |alpha| < 1. tau is renormalized to modulus one.
  DiscAutomorphism(Complex tau, Complex alpha);

  static DiscAutomorphism identity() { return {1.0, 0.0}; }
  static DiscAutomorphism rotation(Complex tau) { return {tau, 0.0}; }
  /// The involution lambda -> (alpha - lambda) / (1 - conj(alpha) * lambda).
  static DiscAutomorphism b_alpha(Complex alpha) { return {-1.0, alpha}; }

  Complex tau() const noexcept { return tau_; }
  Complex alpha() const noexcept { return alpha_; }

  /// Closed-disc evaluation; valid for |lambda| <= 1 (and beyond, away from
  /// the pole 1 / conj(alpha)).
  Complex operator()(Complex lambda) const;
  DiscPoint eval(DiscPoint lambda) const { return (*this)(lambda.value()); }

 private:
  Complex tau_;
  Complex alpha_;
};

/// h o g.
DiscAutomorphism compose(const DiscAutomorphism& h, const DiscAutomorphism& g);
DiscAutomorphism invert(const DiscAutomorphism& h);

/// tau * prod_k (lambda - a_k) / (1 - conj(a_k) * lambda).
class BlaschkeProduct {
 public:
  BlaschkeProduct(Complex tau, std::vector<Complex> zeros);

  Complex tau() const noexcept { return tau_; }
  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  /// Throws a domain error for |lambda| > 1.
  Complex eval(Complex lambda) const;
  Complex operator()(Complex lambda) const { return eval(lambda); }

 private:
  Complex tau_;
  std::vector<Complex> zeros_;
};

/// |(a - b) / (1 - conj(a) b)|.
double mobius_distance(DiscPoint a, DiscPoint b);
/// atanh(mobius_distance(a, b)).
double poincare_distance(DiscPoint a, DiscPoint b);

/// The unique automorphism h with h(a) = c and h(b) = d. Requires a != b and
/// |m(a, b) - m(c, d)| <= tol.
DiscAutomorphism automorphism_through(DiscPoint a, DiscPoint b, DiscPoint c,
                                      DiscPoint d, double tol = kTolInterp);

/// The Blaschke product B of degree <= 2 with B(0) = 0, B(sigma) = t1 and
/// B(-sigma) = t2. Degree one exactly when t2 = -t1 and |t1| = sigma.
BlaschkeProduct blaschke_interpolate_origin(double sigma, Complex t1,
                                            Complex t2,
                                            double tol = kTolInterp);

namespace detail {

// Unchecked pseudo-hyperbolic distance, clamped to [0, 1].
double mobius_unchecked(Complex a, Complex b);

// Roots of a*x^2 + b*x + c with a != 0, larger-magnitude root computed first.
std::pair<Complex, Complex> stable_quadratic_roots(Complex a, Complex b,
                                                   Complex c);

}  // namespace detail

}  // namespace sbgeo
