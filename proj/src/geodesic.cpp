#include "sbgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sbgeo/error.hpp"
#include "sbgeo/optimize.hpp"

namespace sbgeo {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_canonical_half_plane(Complex z) {
  return z.real() > 0.0 || (z.real() == 0.0 && z.imag() >= 0.0);
}

// B(l) and B(-l) induce the same geodesic; pick one representative.
OriginGeodesic canonicalize(const OriginGeodesic& g) {
  if (g.degree() == 1) {
    const Complex tau = g.tau();
    return OriginGeodesic::degree_one(in_canonical_half_plane(tau) ? tau : -tau);
  }
  const Complex alpha = g.alpha();
  return OriginGeodesic::degree_two(
      g.tau(), in_canonical_half_plane(alpha) ? alpha : -alpha);
}

void require_closed_disc(Complex lambda, const char* what) {
  if (std::abs(lambda) > 1.0 + kTolUnimodular) {
    std::ostringstream msg;
    msg << what << ": parameter " << lambda << " lies outside the closed disc";
    throw Error(ErrorKind::Domain, msg.str());
  }
}

// Derivative of F_omega at (s, p) in the direction (ds, dp).
Complex extremal_derivative(Complex omega, const SymPoint& z, Complex ds,
                            Complex dp) {
  if (omega == 0.0) return dp;
  const Complex den = 2.0 - std::conj(omega) * z.s;
  return ((2.0 * dp - omega * ds) * den +
          (2.0 * z.p - omega * z.s) * std::conj(omega) * ds) /
         (den * den);
}

// Value and derivative at 0 of an automorphism.
Complex automorphism_derivative_at_zero(const DiscAutomorphism& f) {
  return f.tau() * (1.0 - std::norm(f.alpha()));
}

}  // namespace

// ---------------------------------------------------------------------------

OriginGeodesic::OriginGeodesic(BlaschkeProduct b) : b_(std::move(b)) {
  if (b_.degree() < 1 || b_.degree() > 2) {
    throw Error(ErrorKind::Domain, "OriginGeodesic: degree must be 1 or 2");
  }
  std::vector<Complex> zeros = b_.zeros();
  const auto at_origin = std::find(zeros.begin(), zeros.end(), Complex(0.0));
  if (at_origin == zeros.end()) {
    throw Error(ErrorKind::Domain, "OriginGeodesic: B(0) must vanish");
  }
  std::iter_swap(zeros.begin(), at_origin);
  b_ = BlaschkeProduct(b_.tau(), std::move(zeros));
}

OriginGeodesic OriginGeodesic::degree_one(Complex tau) {
  return OriginGeodesic(BlaschkeProduct(tau, {Complex(0.0)}));
}

OriginGeodesic OriginGeodesic::degree_two(Complex tau, Complex alpha) {
  return OriginGeodesic(BlaschkeProduct(tau, {Complex(0.0), alpha}));
}

Complex OriginGeodesic::alpha() const noexcept {
  return degree() == 2 ? b_.zeros()[1] : Complex(0.0);
}

SymPoint eval_origin(const OriginGeodesic& g, Complex lambda) {
  require_closed_disc(lambda, "eval_origin");
  const Complex tau = g.tau();
  if (g.degree() == 1) return {0.0, -tau * tau * lambda};
  const Complex alpha = g.alpha();
  const Complex alpha_bar_sq = std::conj(alpha) * std::conj(alpha);
  const Complex den = 1.0 - alpha_bar_sq * lambda;
  return {2.0 * tau * lambda * (1.0 - std::norm(alpha)) / den,
          tau * tau * lambda * (lambda - alpha * alpha) / den};
}

SymPoint eval_origin_branch(const OriginGeodesic& g, Complex lambda,
                            bool other_branch) {
  require_closed_disc(lambda, "eval_origin_branch");
  Complex root = std::sqrt(lambda);
  if (other_branch) root = -root;
  const Complex plus = g.blaschke().eval(root);
  const Complex minus = g.blaschke().eval(-root);
  return {plus + minus, plus * minus};
}

SymPoint eval(const Geodesic& g, Complex lambda) {
  return std::visit(
      Overloaded{
          [&](const OriginGeodesic& o) { return eval_origin(o, lambda); },
          [&](const TransportedGeodesic& t) {
            return RoyalAutomorphism(t.alpha)(eval_origin(t.inner, lambda));
          },
          [&](const FlatGeodesic& f) {
            require_closed_disc(lambda, "eval");
            return pi2(f.f1(lambda), f.f2(lambda));
          }},
      g);
}

RationalMap rational_form(const Geodesic& g) {
  auto origin_form = [](const OriginGeodesic& o) {
    const Complex tau = o.tau();
    if (o.degree() == 1) {
      return RationalMap{Polynomial(), Polynomial({0.0, -tau * tau}),
                         Polynomial::constant(1.0)};
    }
    const Complex alpha = o.alpha();
    const Complex abar = std::conj(alpha);
    return RationalMap{
        Polynomial({0.0, 2.0 * tau * (1.0 - std::norm(alpha))}),
        Polynomial({0.0, -tau * tau * alpha * alpha, tau * tau}),
        Polynomial({1.0, -abar * abar})};
  };
  return std::visit(
      Overloaded{
          origin_form,
          [&](const TransportedGeodesic& t) {
            const RationalMap in = origin_form(t.inner);
            const Complex a = t.alpha, abar = std::conj(t.alpha);
            RationalMap out;
            out.s_num = (2.0 * a) * in.den -
                        Complex(1.0 + std::norm(a)) * in.s_num +
                        (2.0 * abar) * in.p_num;
            out.p_num = (a * a) * in.den - a * in.s_num + in.p_num;
            out.den = in.den - abar * in.s_num + (abar * abar) * in.p_num;
            return out;
          },
          [](const FlatGeodesic& f) {
            auto num = [](const DiscAutomorphism& h) {
              return h.tau() * Polynomial::linear_root(h.alpha());
            };
            auto den = [](const DiscAutomorphism& h) {
              return Polynomial({1.0, -std::conj(h.alpha())});
            };
            const Polynomial n1 = num(f.f1), n2 = num(f.f2);
            const Polynomial d1 = den(f.f1), d2 = den(f.f2);
            return RationalMap{n1 * d2 + n2 * d1, n1 * n2, d1 * d2};
          }},
      g);
}

// ---------------------------------------------------------------------------

double OriginConstruction::distance() const { return std::atanh(sigma * sigma); }
double TransportedConstruction::distance() const {
  return std::atanh(sigma * sigma);
}
double FlatConstruction::distance() const { return std::atanh(lambda2); }

OriginConstruction construct_origin(const SymPoint& target,
                                    const OriginOptions& options) {
  if (target.s == 0.0 && target.p == 0.0) {
    throw Error(ErrorKind::Degenerate, "construct_origin: target is the origin");
  }
  const Membership member = contains(target);
  if (!member.inside) {
    throw Error(ErrorKind::Domain, "construct_origin: target is not in G2");
  }
  Complex t1 = member.lift.l1, t2 = member.lift.l2;
  if (options.swap_lift) std::swap(t1, t2);

  if (std::abs(t1 + t2) <= 1e-12) {
    const double sigma = std::abs(t1);
    return {canonicalize(OriginGeodesic::degree_one(t1 / sigma)), sigma};
  }

  // Sign of p(sigma, -sigma) - p(t1 / sigma, -t2 / sigma); atanh is monotone,
  // so pseudo-hyperbolic distances are compared directly.
  auto mismatch = [&](double sigma) {
    const Complex u = t1 / sigma, v = -t2 / sigma;
    if (std::abs(u) >= 1.0 || std::abs(v) >= 1.0) return -1.0;
    return 2.0 * sigma / (1.0 + sigma * sigma) - detail::mobius_unchecked(u, v);
  };
  double lo = std::max(std::abs(t1), std::abs(t2)) + options.bracket_lo_offset;
  double hi = 1.0 - options.bracket_hi_offset;
  double f_lo = mismatch(lo), f_hi = mismatch(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "construct_origin: no sign change on [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::Internal, msg.str());
  }
  // Bisect down to machine resolution; this is finer than sigma_tol.
  for (int iter = 0; iter < options.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = mismatch(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  if (hi - lo > options.sigma_tol) {
    throw Error(ErrorKind::Internal, "construct_origin: bisection did not converge");
  }
  const double sigma = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  const BlaschkeProduct b =
      blaschke_interpolate_origin(sigma, t1, t2, options.tol_interp);
  return {canonicalize(OriginGeodesic(b)), sigma};
}

TransportedConstruction construct_through_royal(const SymPoint& z0,
                                                const SymPoint& w,
                                                const OriginOptions& options) {
  if (!on_royal_variety(z0)) {
    throw Error(ErrorKind::Domain,
                "construct_through_royal: first point is not on the royal variety");
  }
  if (!contains(w).inside) {
    throw Error(ErrorKind::Domain, "construct_through_royal: w is not in G2");
  }
  const Complex a = z0.s / 2.0;
  const RoyalAutomorphism transport{DiscPoint(a)};
  const SymPoint moved = transport(w);
  if (w.s == z0.s && w.p == z0.p) {
    throw Error(ErrorKind::Degenerate, "construct_through_royal: w equals z0");
  }
  const OriginConstruction inner = construct_origin(moved, options);
  return {TransportedGeodesic{a, inner.geodesic}, inner.sigma};
}

// ---------------------------------------------------------------------------

Certificate certificate_origin(const OriginGeodesic& g) {
  const Complex tau = g.tau();
  Certificate cert;
  if (g.degree() == 1) {
    cert.omega = ExtremalParam::zero();
    cert.rotation = DiscAutomorphism::rotation(-tau * tau);
    return cert;
  }
  const Complex alpha = g.alpha();
  if (alpha == 0.0) {
    cert.omega = ExtremalParam::unit(1.0);
    cert.rotation = DiscAutomorphism::rotation(-tau);
    return cert;
  }
  const Complex phase = alpha / std::conj(alpha);  // |alpha|^2 / conj(alpha)^2
  cert.omega = ExtremalParam::unit(phase * tau);
  cert.rotation = DiscAutomorphism::rotation(-tau * tau * phase);
  return cert;
}

std::vector<Complex> certificate_sample_grid(int count) {
  // Sunflower lattice of the disc of radius 0.95.
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Complex> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double r = 0.95 * std::sqrt((k + 0.5) / count);
    pts.push_back(std::polar(r, k * golden_angle));
  }
  return pts;
}

double verify_certificate(const Geodesic& g, const Certificate& cert,
                          int samples) {
  double worst = 0.0;
  for (const Complex& lambda : certificate_sample_grid(samples)) {
    const Complex lhs = extremal_eval(cert.omega, eval(g, lambda)).value();
    worst = std::max(worst, std::abs(lhs - cert.rotation(lambda)));
  }
  return worst;
}

// ---------------------------------------------------------------------------

RootFreeReport rootfree_report(const DiscAutomorphism& f1,
                               const DiscAutomorphism& f2) {
  RootFreeReport report;
  report.normalized = compose(f2, invert(f1));
  const Complex tau = report.normalized.tau();
  const Complex alpha = report.normalized.alpha();
  if (std::abs(tau - 1.0) <= kTolUnimodular && std::abs(alpha) <= kTolUnimodular) {
    throw Error(ErrorKind::Degenerate, "flat_rootfree_check: f1 and f2 coincide");
  }
  report.inequality_margin = 2.0 * std::abs(alpha) - std::abs(1.0 - tau);
  report.by_inequality = report.inequality_margin >= 0.0;

  // l = tau (l - alpha) / (1 - conj(alpha) l)
  //   <=> conj(alpha) l^2 + (tau - 1) l - tau alpha = 0.
  if (alpha == 0.0) {
    report.roots = {Complex(0.0)};
  } else {
    auto [r1, r2] =
        detail::stable_quadratic_roots(std::conj(alpha), tau - 1.0, -tau * alpha);
    report.roots = {r1, r2};
  }
  report.by_quadratic = std::none_of(
      report.roots.begin(), report.roots.end(),
      [](Complex r) { return std::abs(r) < 1.0 - 1e-10; });
  return report;
}

bool flat_rootfree_check(const DiscAutomorphism& f1, const DiscAutomorphism& f2) {
  const RootFreeReport report = rootfree_report(f1, f2);
  if (report.by_inequality != report.by_quadratic &&
      std::abs(report.inequality_margin) > 1e-9) {
    throw Error(ErrorKind::Internal,
                "flat_rootfree_check: inequality and quadratic solve disagree");
  }
  return report.by_inequality;
}

FlatConstruction construct_flat(const SymPoint& z, const SymPoint& w,
                                const FlatOptions& options) {
  if (z.s == w.s && z.p == w.p) {
    throw Error(ErrorKind::Degenerate, "construct_flat: points coincide");
  }
  const Membership mz = contains(z), mw = contains(w);
  if (!mz.inside || !mw.inside) {
    throw Error(ErrorKind::Domain, "construct_flat: both points must lie in G2");
  }
  struct Pairing {
    Complex za, wa, zb, wb;
    double mismatch;
  };
  auto make = [](Complex za, Complex wa, Complex zb, Complex wb) {
    return Pairing{za, wa, zb, wb,
                   std::abs(poincare_distance(za, wa) - poincare_distance(zb, wb))};
  };
  const Pairing pairings[2] = {make(mz.lift.l1, mw.lift.l1, mz.lift.l2, mw.lift.l2),
                               make(mz.lift.l1, mw.lift.l2, mz.lift.l2, mw.lift.l1)};
  bool any_balanced = false;
  double best_mismatch = pairings[0].mismatch;
  for (const Pairing& pr : pairings) {
    best_mismatch = std::min(best_mismatch, pr.mismatch);
    if (pr.mismatch > options.tol_interp) continue;
    any_balanced = true;
    const double lambda2 = mobius_distance(pr.za, pr.wa);
    if (lambda2 == 0.0) continue;
    const DiscAutomorphism f1 =
        automorphism_through(0.0, lambda2, pr.za, pr.wa, options.tol_interp);
    const DiscAutomorphism f2 =
        automorphism_through(0.0, lambda2, pr.zb, pr.wb, options.tol_interp);
    try {
      if (flat_rootfree_check(f1, f2)) return {FlatGeodesic{f1, f2}, lambda2};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
    }
  }
  if (any_balanced) {
    throw Error(ErrorKind::InfeasibleRoyalCrossing,
                "construct_flat: f1 - f2 vanishes in the disc; the geodesic "
                "meets the royal variety");
  }
  std::ostringstream msg;
  msg.precision(3);
  msg << "construct_flat: lift pairings unbalanced (best mismatch "
      << best_mismatch << ")";
  if (best_mismatch < options.ambiguous_below) {
    throw Error(ErrorKind::Ambiguous, msg.str());
  }
  throw Error(ErrorKind::InfeasibleUnbalanced, msg.str());
}

double flat_derivative_ratio(const DiscAutomorphism& g, Complex omega) {
  // phi(l) = pi(l, g(l)); at 0: phi = (g(0), 0), phi' = (1 + g'(0), g(0)).
  const Complex g0 = g(0.0);
  const Complex dg0 = automorphism_derivative_at_zero(g);
  const SymPoint at0{g0, 0.0};
  const Complex value = detail::extremal_unchecked(omega, at0);
  const Complex slope = extremal_derivative(omega, at0, 1.0 + dg0, g0);
  return std::abs(slope) / (1.0 - std::norm(value));
}

Certificate certificate_flat(const FlatGeodesic& g,
                             const FlatCertificateOptions& options) {
  const DiscAutomorphism normalized = compose(g.f2, invert(g.f1));
  const Complex tau = normalized.tau();
  const Complex alpha = normalized.alpha();
  const double abs_alpha = std::abs(alpha);

  Complex omega;
  double ratio;
  if (abs_alpha > 0.0 && tau.imag() != 0.0 &&
      std::abs(std::abs(1.0 - tau) - 2.0 * abs_alpha) <= options.boundary_band) {
    const double sign = tau.imag() > 0.0 ? 1.0 : -1.0;
    const Complex reduced(-abs_alpha, sign * std::sqrt(1.0 - abs_alpha * abs_alpha));
    omega = std::conj(reduced) * tau * alpha / abs_alpha;
    omega /= std::abs(omega);
    ratio = flat_derivative_ratio(normalized, omega);
  } else {
    const int n = options.grid;
    const double step = 2.0 * std::numbers::pi / n;
    auto objective = [&](double theta) {
      return flat_derivative_ratio(normalized, std::polar(1.0, theta));
    };
    int best_k = 0;
    double best = objective(0.0);
    for (int k = 1; k < n; ++k) {
      const double v = objective(k * step);
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
    const auto refined = optimize::golden_section_max(
        objective, (best_k - 1) * step, (best_k + 1) * step, options.angle_tol);
    double theta = best_k * step;
    if (refined.value > best) {
      best = refined.value;
      theta = refined.x;
    }
    omega = std::polar(1.0, theta);
    ratio = best;
  }
  if (!(ratio >= options.accept_ratio)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "certificate_flat: best Schwarz-Pick ratio " << ratio
        << " falls short of 1";
    throw Error(ErrorKind::CertificationFailure, msg.str());
  }

  // F o phi as an automorphism h from its value and derivative at 0:
  // h(0) = -tau_h alpha_h, h'(0) = tau_h (1 - |alpha_h|^2).
  const Complex f1_0 = g.f1(0.0), f2_0 = g.f2(0.0);
  const Complex d1 = automorphism_derivative_at_zero(g.f1);
  const Complex d2 = automorphism_derivative_at_zero(g.f2);
  const SymPoint at0 = pi2(f1_0, f2_0);
  const Complex h0 = detail::extremal_unchecked(omega, at0);
  const Complex dh0 = extremal_derivative(omega, at0, d1 + d2, d1 * f2_0 + f1_0 * d2);
  const Complex tau_h = dh0 / std::abs(dh0);

  Certificate cert;
  cert.omega = ExtremalParam::unit(omega);
  cert.rotation = DiscAutomorphism(tau_h, -h0 / tau_h);
  cert.ratio = ratio;
  return cert;
}

Certificate certificate_search(const Geodesic& g,
                               const FlatCertificateOptions& options) {
  // phi(0) and phi'(0) from the rational form n / d.
  const RationalMap r = rational_form(g);
  auto at0 = [](const Polynomial& num, const Polynomial& den) {
    const Complex n0 = num(0.0), n1 = num.derivative()(0.0);
    const Complex d0 = den(0.0), d1 = den.derivative()(0.0);
    return std::pair{n0 / d0, (n1 * d0 - n0 * d1) / (d0 * d0)};
  };
  const auto [s0, ds] = at0(r.s_num, r.den);
  const auto [p0, dp] = at0(r.p_num, r.den);
  const SymPoint z0{s0, p0};

  auto ratio_at = [&](Complex omega) {
    const Complex value = detail::extremal_unchecked(omega, z0);
    return std::abs(extremal_derivative(omega, z0, ds, dp)) /
           (1.0 - std::norm(value));
  };
  Complex omega = 0.0;
  double best = ratio_at(0.0);
  const int n = options.grid;
  const double step = 2.0 * std::numbers::pi / n;
  auto objective = [&](double theta) { return ratio_at(std::polar(1.0, theta)); };
  int best_k = -1;
  for (int k = 0; k < n; ++k) {
    const double v = objective(k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  if (best_k >= 0) {
    omega = std::polar(1.0, best_k * step);
    const auto refined = optimize::golden_section_max(
        objective, (best_k - 1) * step, (best_k + 1) * step, options.angle_tol);
    if (refined.value > best) {
      best = refined.value;
      omega = std::polar(1.0, refined.x);
    }
  }
  if (!(best >= options.accept_ratio)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "certificate_search: best Schwarz-Pick ratio " << best
        << " falls short of 1";
    throw Error(ErrorKind::CertificationFailure, msg.str());
  }
  const Complex h0 = detail::extremal_unchecked(omega, z0);
  const Complex dh0 = extremal_derivative(omega, z0, ds, dp);
  const Complex tau_h = dh0 / std::abs(dh0);

  Certificate cert;
  cert.omega = ExtremalParam::make(omega);
  cert.rotation = DiscAutomorphism(tau_h, -h0 / tau_h);
  cert.ratio = best;
  return cert;
}

Certificate certificate(const Geodesic& g, const FlatCertificateOptions& options) {
  if (const auto* o = std::get_if<OriginGeodesic>(&g)) return certificate_origin(*o);
  if (const auto* f = std::get_if<FlatGeodesic>(&g)) return certificate_flat(*f, options);
  return certificate_search(g, options);
}

// ---------------------------------------------------------------------------

RoyalIntersection royal_intersection_class(const Geodesic& g) {
  const RationalMap r = rational_form(g);
  const Polynomial square = r.s_num * r.s_num;
  const Polynomial product = Complex(4.0) * (r.p_num * r.den);
  const Polynomial psi = square - product;
  const double scale = std::max(square.max_abs_coeff(), product.max_abs_coeff());
  if (psi.max_abs_coeff() <= 1e-13 * scale) {
    return {RoyalIntersection::Kind::Whole, 0.0};
  }
  // Leading terms that cancel algebraically leave rounding residue.
  std::vector<Complex> c = psi.coeffs();
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
  const Polynomial trimmed(std::move(c));
  if (trimmed.degree() < 1) return {RoyalIntersection::Kind::Empty, 0.0};

  std::vector<Complex> inside;
  for (const RootCluster& cl : cluster_roots(polynomial_roots(trimmed), 1e-3)) {
    const Complex center = polish_multiple_root(trimmed, cl.center, cl.multiplicity);
    if (std::abs(center) < 1.0 - 1e-10) inside.push_back(center);
  }
  if (inside.empty()) return {RoyalIntersection::Kind::Empty, 0.0};
  if (inside.size() == 1) return {RoyalIntersection::Kind::SinglePoint, inside[0]};
  std::ostringstream msg;
  msg << "royal_intersection_class: " << inside.size()
      << " isolated intersections; the map is not a geodesic";
  throw Error(ErrorKind::Classification, msg.str());
}

std::vector<TraceRow> boundary_trace(const Geodesic& g, int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "boundary_trace: need n >= 1");
  const RationalMap r = rational_form(g);
  std::vector<TraceRow> rows;
  rows.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const Complex lambda = std::polar(1.0, theta);
    const Complex den = r.den(lambda);
    if (std::abs(den) < 1e-14) {
      throw Error(ErrorKind::Internal, "boundary_trace: pole on the unit circle");
    }
    const SymPoint value{r.s_num(lambda) / den, r.p_num(lambda) / den};
    const Lift l = lift(value);
    rows.push_back({theta, std::abs(l.l1), std::abs(l.l2), value});
  }
  return rows;
}

// ---------------------------------------------------------------------------

VerifyReport verify_geodesic(const AnalyticDisc& phi,
                             const std::vector<std::pair<Complex, Complex>>& pairs,
                             double tol, const SweepOptions& sweep) {
  VerifyReport report;
  report.pairs.reserve(pairs.size());
  for (const auto& [l1, l2] : pairs) {
    const SymPoint z = phi(l1), w = phi(l2);
    const double c = caratheodory(z, w, sweep).value;
    const double p = poincare_distance(l1, l2);
    const double dev = std::abs(c - p);
    report.pairs.push_back({l1, l2, c, p, dev, dev <= tol});
  }
  for (const PairCheck& pc : report.pairs) {
    report.worst_deviation = std::max(report.worst_deviation, pc.deviation);
    report.passed = report.passed && pc.pass;
  }
  return report;
}

VerifyReport verify_geodesic(const Geodesic& g,
                             const std::vector<std::pair<Complex, Complex>>& pairs,
                             double tol, const SweepOptions& sweep) {
  return verify_geodesic([&g](Complex l) { return eval(g, l); }, pairs, tol, sweep);
}

}  // namespace sbgeo
