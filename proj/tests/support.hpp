#pragma once

// Independent reference formulas used as oracles. They deliberately avoid the
// library code paths they are compared against.

#include <cmath>
#include <complex>

#include "sbgeo/bidisc.hpp"

namespace oracle {

using C = std::complex<double>;

inline double pseudo_hyperbolic(C a, C b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

inline double poincare(C a, C b) { return std::atanh(pseudo_hyperbolic(a, b)); }

// B_alpha(s, p) without going through the lift.
inline sbgeo::SymPoint royal_closed_form(C a, const sbgeo::SymPoint& z) {
  const C ac = std::conj(a);
  const C den = 1.0 - ac * z.s + ac * ac * z.p;
  return {(2.0 * a - (1.0 + std::norm(a)) * z.s + 2.0 * ac * z.p) / den,
          (a * a - a * z.s + z.p) / den};
}

inline double sym_distance(const sbgeo::SymPoint& a, const sbgeo::SymPoint& b) {
  return std::max(std::abs(a.s - b.s), std::abs(a.p - b.p));
}

// Brute-force Caratheodory value: dense omega grid with no refinement.
inline double caratheodory_brute(const sbgeo::SymPoint& z, const sbgeo::SymPoint& w,
                                 int grid) {
  auto f = [](C omega, const sbgeo::SymPoint& x) {
    return (2.0 * x.p - omega * x.s) / (2.0 - std::conj(omega) * x.s);
  };
  double best = pseudo_hyperbolic(z.p, w.p);
  for (int k = 0; k < grid; ++k) {
    const C omega = std::polar(1.0, 2.0 * M_PI * k / grid);
    best = std::max(best, pseudo_hyperbolic(f(omega, z), f(omega, w)));
  }
  return std::atanh(best);
}

}  // namespace oracle
