#pragma once

// Caratheodory lower bound versus Lempert upper bound on G2.

#include <optional>
#include <string_view>

#include "sbgeo/caratheodory.hpp"
#include "sbgeo/geodesic.hpp"

namespace sbgeo {

enum class WitnessMethod {
  Degenerate,  // z == w
  Royal,       // one endpoint on S; transported origin geodesic
  Flat,        // pi o (f1, f2)
  Search,      // transported geodesic located by a parametric search
  LiftBound,   // no witness: bidisc bound max(p(z1, w1), p(z2, w2))
};

std::string_view to_string(WitnessMethod method);

struct DistanceOptions {
  SweepOptions sweep;
  double tol_interp = kTolInterp;
  double tol_gap = 1e-6;
  int search_starts = 32;
  double search_residual = 1e-8;  // accepted residual of the search fit
};

struct LempertResult {
  double value = 0.0;
  std::optional<Geodesic> witness;
  Complex preimage_z = 0.0;  // witness(preimage_z) = z
  Complex preimage_w = 0.0;  // witness(preimage_w) = w (up to residual)
  WitnessMethod method = WitnessMethod::LiftBound;
  double residual = 0.0;
  /// False when only the lift bound is available.
  bool has_witness = false;
};

/// Smallest bidisc distance over the two lift pairings.
double lift_bound(const SymPoint& z, const SymPoint& w);

/// Upper bound for the Lempert function from an explicit analytic disc.
/// Throws a degenerate error when z == w.
LempertResult lempert_upper(const SymPoint& z, const SymPoint& w,
                            const DistanceOptions& options = {});

struct DistanceReport {
  double caratheodory_lower = 0.0;
  ExtremalParam argmax_omega = ExtremalParam::zero();
  double lempert_upper = 0.0;
  LempertResult witness;
  double gap = 0.0;
  bool tight = false;  // gap < tol_gap: the witness is a certified geodesic
};

/// Both bounds for the pair. Throws an internal error if the lower bound
/// exceeds the upper bound by more than 1e-12.
DistanceReport distance_report(const SymPoint& z, const SymPoint& w,
                               const DistanceOptions& options = {});

}  // namespace sbgeo
