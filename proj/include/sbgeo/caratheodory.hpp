#pragma once

// Caratheodory distance of G2 as a sweep over the extremal family F_omega,
// omega in {0} and the unit circle.

#include "sbgeo/bidisc.hpp"

namespace sbgeo {

struct SweepOptions {
  int grid = 1024;           // uniform angle grid on the unit circle
  int refine_brackets = 3;   // local maxima refined by golden section
  double angle_tol = 1e-12;  // golden-section bracket width
};

struct CaratheodoryResult {
  double value = 0.0;  // Poincare distance, atanh of the best ratio
  ExtremalParam argmax = ExtremalParam::zero();
};

/// max over omega of p(F_omega(z), F_omega(w)). Ties keep the earliest
/// candidate in the order omega = 0, then increasing angle.
CaratheodoryResult caratheodory(const SymPoint& z, const SymPoint& w,
                                const SweepOptions& options = {});

}  // namespace sbgeo
