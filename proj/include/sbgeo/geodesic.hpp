#pragma once

// Complex geodesics of G2: construction, evaluation, certification,
// royal-variety classification and verification.
//
// Three normal forms cover every geodesic:
//   origin       phi(l) = (B(r) + B(-r), B(r) B(-r)), r^2 = l, B(0) = 0,
//                B a Blaschke product of degree one or two;
//   transported  B_a o (origin form), passing through (2a, a^2) at l = 0;
//   flat         pi o (f1, f2), f1, f2 disc automorphisms, f1 - f2 zero-free.

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "sbgeo/bidisc.hpp"
#include "sbgeo/caratheodory.hpp"
#include "sbgeo/polynomial.hpp"

namespace sbgeo {

class OriginGeodesic {
 public:
  /// Requires degree 1 or 2 and an exact zero at the origin. The zero list is
  /// reordered so that 0 comes first.
  explicit OriginGeodesic(BlaschkeProduct b);

  static OriginGeodesic degree_one(Complex tau);
  static OriginGeodesic degree_two(Complex tau, Complex alpha);

  const BlaschkeProduct& blaschke() const noexcept { return b_; }
  int degree() const noexcept { return b_.degree(); }
  Complex tau() const noexcept { return b_.tau(); }
  /// Second zero of a degree-two product; 0 for degree one.
  Complex alpha() const noexcept;

 private:
  BlaschkeProduct b_;
};

struct TransportedGeodesic {
  Complex alpha;  // royal point (2 alpha, alpha^2) is the image of 0
  OriginGeodesic inner;
};

struct FlatGeodesic {
  DiscAutomorphism f1;
  DiscAutomorphism f2;
};

using Geodesic = std::variant<OriginGeodesic, TransportedGeodesic, FlatGeodesic>;

/// Closed-form evaluation; requires |lambda| <= 1.
SymPoint eval_origin(const OriginGeodesic& g, Complex lambda);
/// (B(r) + B(-r), B(r) B(-r)) with r the principal square root of lambda, or
/// its negative when other_branch is set.
SymPoint eval_origin_branch(const OriginGeodesic& g, Complex lambda,
                            bool other_branch = false);
SymPoint eval(const Geodesic& g, Complex lambda);

/// phi = (s_num / den, p_num / den) as polynomials in lambda.
struct RationalMap {
  Polynomial s_num;
  Polynomial p_num;
  Polynomial den;
};
RationalMap rational_form(const Geodesic& g);

// ---------------------------------------------------------------------------
// Geodesics through the origin.

struct OriginOptions {
  double tol_interp = kTolInterp;
  double bracket_lo_offset = 1e-14;
  double bracket_hi_offset = 1e-14;
  int max_iter = 200;
  double sigma_tol = 1e-12;
  bool swap_lift = false;  // feed (t2, t1) instead of (t1, t2)
};

struct OriginConstruction {
  OriginGeodesic geodesic;
  double sigma;  // phi(sigma^2) = target
  double distance() const;
};

/// The geodesic phi with phi(0) = (0, 0) and phi(sigma^2) = target. B is
/// canonicalized so that the result does not depend on the lift order:
/// B(l) and B(-l) define the same map, and the representative with the
/// second zero (degree two) or tau (degree one) in the half-plane
/// re > 0 or (re = 0, im >= 0) is returned.
OriginConstruction construct_origin(const SymPoint& target,
                                    const OriginOptions& options = {});

struct TransportedConstruction {
  TransportedGeodesic geodesic;
  double sigma;  // w is reached at sigma^2, z0 at 0
  double distance() const;
};

/// Geodesic through z0 = (2a, a^2) and w, built as B_a o construct_origin(B_a(w)).
TransportedConstruction construct_through_royal(
    const SymPoint& z0, const SymPoint& w, const OriginOptions& options = {});

// ---------------------------------------------------------------------------
// Certificates: F_omega o phi is a disc automorphism.

struct Certificate {
  ExtremalParam omega = ExtremalParam::zero();
  DiscAutomorphism rotation = DiscAutomorphism::identity();
  /// Schwarz-Pick ratio reached by the omega search (flat geodesics); 1 for
  /// the closed-form origin certificates.
  double ratio = 1.0;
};

Certificate certificate_origin(const OriginGeodesic& g);

/// Deterministic sample grid of the disc used by certificate checks.
std::vector<Complex> certificate_sample_grid(int count = 256);

/// max over the sample grid of |F_omega(phi(l)) - rotation(l)|.
double verify_certificate(const Geodesic& g, const Certificate& cert,
                          int samples = 256);

// ---------------------------------------------------------------------------
// Flat geodesics.

struct RootFreeReport {
  DiscAutomorphism normalized = DiscAutomorphism::identity();  // f2 o f1^-1
  bool by_inequality = false;   // |1 - tau| <= 2|alpha|
  bool by_quadratic = false;    // no root of the quadratic in the open disc
  double inequality_margin = 0; // 2|alpha| - |1 - tau|
  std::vector<Complex> roots;   // both roots of the normalized quadratic
};

/// Throws a degenerate error when f1 == f2.
RootFreeReport rootfree_report(const DiscAutomorphism& f1,
                               const DiscAutomorphism& f2);

/// True when f1 - f2 has no zero in the disc. Throws an internal error if the
/// inequality test and the quadratic solve disagree outside a 1e-9 band.
bool flat_rootfree_check(const DiscAutomorphism& f1, const DiscAutomorphism& f2);

struct FlatOptions {
  double tol_interp = kTolInterp;
  double ambiguous_below = 1e-6;  // mismatch in (tol_interp, this) is ambiguous
};

struct FlatConstruction {
  FlatGeodesic geodesic;
  double lambda2;  // z at 0, w at lambda2
  double distance() const;
};

FlatConstruction construct_flat(const SymPoint& z, const SymPoint& w,
                                const FlatOptions& options = {});

struct FlatCertificateOptions {
  int grid = 1024;
  double angle_tol = 1e-12;
  double accept_ratio = 1.0 - 1e-6;  // below this: certification failure
  double boundary_band = 1e-9;       // |1 - tau| = 2|alpha| within this
};

/// Schwarz-Pick ratio at the origin of F_omega o pi o (id, g), computed from
/// exact derivatives. Equals 1 exactly when the composition is an automorphism.
double flat_derivative_ratio(const DiscAutomorphism& g, Complex omega);

Certificate certificate_flat(const FlatGeodesic& g,
                             const FlatCertificateOptions& options = {});

/// Omega search for any geodesic: maximizes the Schwarz-Pick ratio at 0 of
/// F_omega o phi over omega = 0 and the unit circle, using exact derivatives.
Certificate certificate_search(const Geodesic& g,
                               const FlatCertificateOptions& options = {});

/// Closed form for origin geodesics, certificate_flat for flat ones and the
/// omega search for transported ones.
Certificate certificate(const Geodesic& g,
                        const FlatCertificateOptions& options = {});

// ---------------------------------------------------------------------------
// Royal variety intersections and boundary behaviour.

struct RoyalIntersection {
  enum class Kind { Empty, SinglePoint, Whole };
  Kind kind = Kind::Empty;
  Complex lambda0 = 0.0;  // meaningful for SinglePoint
};

/// Classifies phi(D) n S via the numerator of psi = phi1^2 - 4 phi2.
RoyalIntersection royal_intersection_class(const Geodesic& g);

struct TraceRow {
  double theta;
  double modulus1;
  double modulus2;
  SymPoint value;
};

/// phi(e^{i theta}) on a uniform grid of n angles and the moduli of its lift.
std::vector<TraceRow> boundary_trace(const Geodesic& g, int n);

// ---------------------------------------------------------------------------
// Verification against the Caratheodory sweep.

struct PairCheck {
  Complex lambda1;
  Complex lambda2;
  double caratheodory;
  double poincare;
  double deviation;
  bool pass;
};

struct VerifyReport {
  std::vector<PairCheck> pairs;
  double worst_deviation = 0.0;
  bool passed = true;
};

using AnalyticDisc = std::function<SymPoint(Complex)>;

VerifyReport verify_geodesic(const AnalyticDisc& phi,
                             const std::vector<std::pair<Complex, Complex>>& pairs,
                             double tol, const SweepOptions& sweep = {});
VerifyReport verify_geodesic(const Geodesic& g,
                             const std::vector<std::pair<Complex, Complex>>& pairs,
                             double tol, const SweepOptions& sweep = {});

}  // namespace sbgeo
