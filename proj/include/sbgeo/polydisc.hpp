#pragma once

// The symmetrized polydisc Gn = pi_n(D^n) and the candidate geodesics
// through the origin phi(l) = pi_n(B(e_0 r), ..., B(e_{n-1} r)), r^n = l.
// Upper bounds only: nothing here claims that a candidate is extremal.

#include <optional>
#include <vector>

#include "sbgeo/disc.hpp"

namespace sbgeo {

/// Elementary symmetric values (sigma_1, ..., sigma_n).
struct SymPointN {
  std::vector<Complex> sigma;
  int n() const noexcept { return static_cast<int>(sigma.size()); }
};

SymPointN pi_n(const std::vector<Complex>& l);

struct MembershipN {
  bool inside = false;
  double margin = 0.0;  // 1 - max |root|
  std::vector<Complex> roots;
};

/// Roots of x^n - sigma_1 x^(n-1) + ... + (-1)^n sigma_n.
MembershipN contains_n(const SymPointN& z);

class ConjecturedGeodesic {
 public:
  /// Requires n >= 2, degree(b) <= n and b(0) = 0.
  ConjecturedGeodesic(int n, BlaschkeProduct b);

  int n() const noexcept { return n_; }
  const BlaschkeProduct& blaschke() const noexcept { return b_; }

 private:
  int n_;
  BlaschkeProduct b_;
};

/// phi evaluated with root r = |l|^(1/n) e^{i arg(l)/n}; a second branch is
/// evaluated too and an internal error is raised if they differ by > 1e-10.
SymPointN eval_conjectured(const ConjecturedGeodesic& g, Complex lambda);

/// phi evaluated with the given n-th root of lambda.
SymPointN eval_conjectured_at_root(const ConjecturedGeodesic& g, Complex root);

struct GnFitOptions {
  int starts_per_zero = 8;
  int max_iter = 20000;
  double residual_target = 1e-10;
  double success_residual = 1e-8;
};

struct GnUpperBound {
  double value = 0.0;  // upper bound on the Lempert function at (0, target)
  bool has_witness = false;
  std::optional<ConjecturedGeodesic> witness;
  double sigma = 0.0;  // witness(sigma^n) = target
  int degree = 0;      // degree of the witness B
  double residual = 0.0;
  double lift_bound = 0.0;  // atanh(max |root|)
};

/// Fits B of each degree 1..n and sigma. Throws a degenerate error when the
/// target is the origin and a domain error when it is outside Gn.
GnUpperBound lempert_upper_origin_n(const SymPointN& target,
                                    const GnFitOptions& options = {});

}  // namespace sbgeo
