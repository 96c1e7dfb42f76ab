#pragma once

// The symmetrized bidisc G2 = pi(D x D), pi(l1, l2) = (l1 + l2, l1 * l2).

#include <cstdint>

#include "sbgeo/disc.hpp"
#include "sbgeo/random.hpp"

namespace sbgeo {

/// Default tolerance on |s^2 - 4p| for royal-variety membership.
inline constexpr double kTolRoyal = 1e-10;

/// A point (s, p) of C^2. Membership in G2 is a separate predicate, so
/// boundary and exterior points are representable.
struct SymPoint {
  Complex s;
  Complex p;
};

/// Roots of x^2 - s x + p, ordered lexicographically by (re, im).
struct Lift {
  Complex l1;
  Complex l2;
};

struct Membership {
  bool inside = false;
  /// 1 - max(|l1|, |l2|): positive inside, zero on the boundary.
  double margin = 0.0;
  Lift lift;
};

/// omega = 0 or |omega| = 1; selects F_0(s, p) = p or
/// F_omega(s, p) = (2p - omega s) / (2 - conj(omega) s).
class ExtremalParam {
 public:
  static ExtremalParam zero() { return ExtremalParam(0.0); }
  /// Throws a domain error unless |omega| = 1 within kTolUnimodular.
  static ExtremalParam unit(Complex omega);
  static ExtremalParam from_angle(double theta);
  /// Accepts either exact zero or a unimodular value.
  static ExtremalParam make(Complex omega);

  Complex omega() const noexcept { return omega_; }
  bool is_zero() const noexcept { return omega_ == 0.0; }

 private:
  explicit ExtremalParam(Complex omega) : omega_(omega) {}
  Complex omega_;
};

SymPoint pi2(Complex l1, Complex l2);
Lift lift(const SymPoint& z);
Membership contains(const SymPoint& z);
bool on_royal_variety(const SymPoint& z, double tol = kTolRoyal);

/// B_alpha(s, p) = pi(b_alpha(l1), b_alpha(l2)); an involution of G2 that
/// swaps (0, 0) and (2 alpha, alpha^2).
class RoyalAutomorphism {
 public:
  explicit RoyalAutomorphism(DiscPoint alpha) : alpha_(alpha.value()) {}

  Complex alpha() const noexcept { return alpha_; }
  SymPoint operator()(const SymPoint& z) const;
  RoyalAutomorphism inverse() const { return *this; }

 private:
  Complex alpha_;
};

inline RoyalAutomorphism royal_automorphism(DiscPoint alpha) {
  return RoyalAutomorphism(alpha);
}

/// F_omega(z). Throws a domain error unless z lies in G2.
DiscPoint extremal_eval(const ExtremalParam& omega, const SymPoint& z);

/// pi2 of two independent uniform samples of the disc of radius r_max.
SymPoint random_interior_point(Rng& rng, double r_max = 0.95);
SymPoint random_interior_point(std::uint64_t seed, double r_max = 0.95);

namespace detail {

// F_omega without the membership check.
inline Complex extremal_unchecked(Complex omega, const SymPoint& z) {
  if (omega == 0.0) return z.p;
  return (2.0 * z.p - omega * z.s) / (2.0 - std::conj(omega) * z.s);
}

}  // namespace detail

}  // namespace sbgeo
