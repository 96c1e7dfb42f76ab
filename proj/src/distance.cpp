#include "sbgeo/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sbgeo/error.hpp"
#include "sbgeo/optimize.hpp"

namespace sbgeo {

std::string_view to_string(WitnessMethod method) {
  switch (method) {
    case WitnessMethod::Degenerate: return "degenerate";
    case WitnessMethod::Royal: return "royal";
    case WitnessMethod::Flat: return "flat";
    case WitnessMethod::Search: return "search";
    case WitnessMethod::LiftBound: return "lift-bound";
  }
  return "unknown";
}

double lift_bound(const SymPoint& z, const SymPoint& w) {
  const Lift lz = lift(z), lw = lift(w);
  const double straight = std::max(poincare_distance(lz.l1, lw.l1),
                                   poincare_distance(lz.l2, lw.l2));
  const double crossed = std::max(poincare_distance(lz.l1, lw.l2),
                                  poincare_distance(lz.l2, lw.l1));
  return std::min(straight, crossed);
}

namespace {

// A geodesic through the royal point (2a, a^2) and z, tested against w.
struct RoyalFit {
  Complex a;
  OriginConstruction through_z;
  Complex nu;        // w is hit at nu^2 (up to residual)
  Complex residual;  // B(-nu) - second lift coordinate of B_a(w)
};

RoyalFit fit_through(Complex a, const SymPoint& z, const SymPoint& w,
                     const OriginOptions& origin_options) {
  const RoyalAutomorphism transport{DiscPoint(a)};
  const SymPoint z_moved = transport(z), w_moved = transport(w);
  const OriginConstruction oc = construct_origin(z_moved, origin_options);
  const BlaschkeProduct& b = oc.geodesic.blaschke();
  const Lift target = lift(w_moved);

  RoyalFit best{a, oc, 0.0, std::numeric_limits<double>::infinity()};
  const std::pair<Complex, Complex> orders[2] = {{target.l1, target.l2},
                                                 {target.l2, target.l1}};
  for (const auto& [x, y] : orders) {
    std::vector<Complex> candidates;
    if (oc.geodesic.degree() == 1) {
      candidates.push_back(x / b.tau());
    } else {
      // tau nu (nu - alpha) = x (1 - conj(alpha) nu)
      const Complex alpha = oc.geodesic.alpha();
      auto [n1, n2] = detail::stable_quadratic_roots(
          b.tau(), x * std::conj(alpha) - b.tau() * alpha, -x);
      candidates = {n1, n2};
    }
    for (const Complex& nu : candidates) {
      if (!(std::abs(nu) < 1.0)) continue;
      const Complex res = b.eval(-nu) - y;
      if (std::abs(res) < std::abs(best.residual)) {
        best.nu = nu;
        best.residual = res;
      }
    }
  }
  return best;
}

// Evaluates B_a o phi at mu minus w in extended precision. With |a| and |mu|
// both close to 1 the double evaluation loses about three digits, enough for a
// converged search to report a witness that misses w by 1e-12.
Eigen::VectorXd hit_error(const TransportedGeodesic& g, Complex mu, const SymPoint& w) {
  using C = std::complex<long double>;
  const C lambda(mu.real(), mu.imag());
  const C tau(g.inner.tau().real(), g.inner.tau().imag());
  C s, p;
  if (g.inner.degree() == 1) {
    s = 0.0L;
    p = -tau * tau * lambda;
  } else {
    const C alpha(g.inner.alpha().real(), g.inner.alpha().imag());
    const C den = 1.0L - std::conj(alpha) * std::conj(alpha) * lambda;
    s = 2.0L * tau * lambda * (1.0L - std::norm(alpha)) / den;
    p = tau * tau * lambda * (lambda - alpha * alpha) / den;
  }
  const C a(g.alpha.real(), g.alpha.imag());
  const C ab = std::conj(a);
  const C den = 1.0L - ab * s + ab * ab * p;
  const C hs = (2.0L * a - (1.0L + std::norm(a)) * s + 2.0L * ab * p) / den;
  const C hp = (a * a - a * s + p) / den;
  const C ds = hs - C(w.s.real(), w.s.imag());
  const C dp = hp - C(w.p.real(), w.p.imag());
  Eigen::VectorXd r(4);
  r << static_cast<double>(ds.real()), static_cast<double>(ds.imag()),
      static_cast<double>(dp.real()), static_cast<double>(dp.imag());
  return r;
}

std::optional<LempertResult> search_anchored(const SymPoint& z, const SymPoint& w,
                                             const DistanceOptions& options) {
  OriginOptions origin_options;
  origin_options.tol_interp = options.tol_interp;

  // Unknowns x = (a, mu): the geodesic through (2a, a^2) and z, evaluated at
  // mu, should hit w. Residuals are measured in the original coordinates;
  // near the circle B_a squeezes everything onto the boundary, so transported
  // residuals would reward drifting towards |a| = 1.
  struct Candidate {
    TransportedGeodesic geodesic;
    double sigma;
  };
  auto through = [&](Complex a) {
    if (!(std::abs(a) < 1.0 - 1e-9)) {
      throw Error(ErrorKind::Domain, "search left the disc");
    }
    const OriginConstruction oc =
        construct_origin(RoyalAutomorphism(a)(z), origin_options);
    if (!(oc.sigma < 1.0 - 1e-12)) {
      throw Error(ErrorKind::Domain, "search reached the boundary");
    }
    return Candidate{TransportedGeodesic{a, oc.geodesic}, oc.sigma};
  };
  auto residual = [&](const Eigen::VectorXd& x) {
    const Candidate c = through(Complex(x[0], x[1]));
    const Complex mu(x[2], x[3]);
    if (!(std::abs(mu) < 1.0 - 1e-12)) {
      throw Error(ErrorKind::Domain, "preimage left the disc");
    }
    return hit_error(c.geodesic, mu, w);
  };

  // Prescreen a lattice of royal points with the closed-form preimage guess
  // and start from the most promising ones.
  struct Seed {
    double score;
    Eigen::VectorXd x;
  };
  std::vector<Seed> seeds;
  // Rings equally spaced in hyperbolic radius reach crossings near the circle.
  const int rings = 8, spokes = 16;
  for (int i = 0; i < rings; ++i) {
    for (int j = 0; j < spokes; ++j) {
      const double r = std::tanh(0.25 + 0.45 * i);
      const Complex a = std::polar(r, 2.0 * std::numbers::pi * (j + 0.5 * (i % 2)) / spokes);
      try {
        const RoyalFit fit = fit_through(a, z, w, origin_options);
        if (!std::isfinite(std::abs(fit.residual))) continue;
        Eigen::VectorXd x(4);
        const Complex mu = fit.nu * fit.nu;
        x << a.real(), a.imag(), mu.real(), mu.imag();
        seeds.push_back({residual(x).norm(), x});
      } catch (const Error&) {
      }
    }
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Seed& l, const Seed& r) { return l.score < r.score; });
  if (static_cast<int>(seeds.size()) > options.search_starts) {
    seeds.resize(std::max(1, options.search_starts));
  }

  std::optional<Candidate> best;
  Complex best_mu;
  double best_norm = std::numeric_limits<double>::infinity();
  for (const Seed& seed : seeds) {
    optimize::MinimizeResult result;
    try {
      result = optimize::levenberg_marquardt(residual, seed.x);
      const double norm = residual(result.x).norm();
      if (norm < best_norm) {
        best = through(Complex(result.x[0], result.x[1]));
        best_mu = Complex(result.x[2], result.x[3]);
        best_norm = norm;
      }
    } catch (const Error&) {
      continue;
    }
    if (best_norm <= 1e-14) break;
  }
  if (!best || best_norm > options.search_residual) return std::nullopt;

  LempertResult out;
  out.witness = best->geodesic;
  out.preimage_z = best->sigma * best->sigma;
  out.preimage_w = best_mu;
  // The witness reaches w only up to the residual. The bidisc bound between
  // the point actually reached and w covers the remainder, keeping the value
  // a genuine upper bound for the Caratheodory distance.
  auto reached = [&](Complex lambda, const SymPoint& target) {
    const Eigen::VectorXd miss = hit_error(best->geodesic, lambda, target);
    return SymPoint{target.s + Complex(miss[0], miss[1]),
                    target.p + Complex(miss[2], miss[3])};
  };
  out.value = poincare_distance(out.preimage_z, out.preimage_w) +
              lift_bound(reached(out.preimage_z, z), z) +
              lift_bound(reached(best_mu, w), w);
  out.method = WitnessMethod::Search;
  out.residual = best_norm;
  out.has_witness = true;
  return out;
}

// The lattice covers crossings near one endpoint better than the other, so a
// failed search is retried with the roles of z and w exchanged.
std::optional<LempertResult> search_transported(const SymPoint& z, const SymPoint& w,
                                                const DistanceOptions& options) {
  if (auto found = search_anchored(z, w, options)) return found;
  auto found = search_anchored(w, z, options);
  if (found) std::swap(found->preimage_z, found->preimage_w);
  return found;
}

}  // namespace

LempertResult lempert_upper(const SymPoint& z, const SymPoint& w,
                            const DistanceOptions& options) {
  if (!contains(z).inside || !contains(w).inside) {
    throw Error(ErrorKind::Domain, "lempert_upper: both points must lie in G2");
  }
  if (z.s == w.s && z.p == w.p) {
    throw Error(ErrorKind::Degenerate, "lempert_upper: points coincide");
  }
  OriginOptions origin_options;
  origin_options.tol_interp = options.tol_interp;

  const bool z_royal = on_royal_variety(z), w_royal = on_royal_variety(w);
  if (z_royal || w_royal) {
    const SymPoint& anchor = z_royal ? z : w;
    const SymPoint& other = z_royal ? w : z;
    LempertResult out;
    double sigma;
    if (anchor.s == 0.0 && anchor.p == 0.0) {
      // B_0 negates s, so the untransported construction is the natural one.
      const OriginConstruction oc = construct_origin(other, origin_options);
      out.witness = oc.geodesic;
      sigma = oc.sigma;
    } else {
      const TransportedConstruction tc =
          construct_through_royal(anchor, other, origin_options);
      out.witness = tc.geodesic;
      sigma = tc.sigma;
    }
    const Complex far = sigma * sigma;
    out.preimage_z = z_royal ? Complex(0.0) : far;
    out.preimage_w = z_royal ? far : Complex(0.0);
    out.value = std::atanh(sigma * sigma);
    out.method = WitnessMethod::Royal;
    out.has_witness = true;
    return out;
  }

  try {
    FlatOptions flat_options;
    flat_options.tol_interp = options.tol_interp;
    const FlatConstruction fc = construct_flat(z, w, flat_options);
    LempertResult out;
    out.witness = fc.geodesic;
    out.preimage_z = 0.0;
    out.preimage_w = fc.lambda2;
    out.value = fc.distance();
    out.method = WitnessMethod::Flat;
    out.has_witness = true;
    return out;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InfeasibleUnbalanced &&
        e.kind() != ErrorKind::InfeasibleRoyalCrossing &&
        e.kind() != ErrorKind::Ambiguous) {
      throw;
    }
  }

  if (auto found = search_transported(z, w, options)) return *found;

  LempertResult out;
  out.value = lift_bound(z, w);
  out.method = WitnessMethod::LiftBound;
  out.has_witness = false;
  return out;
}

DistanceReport distance_report(const SymPoint& z, const SymPoint& w,
                               const DistanceOptions& options) {
  DistanceReport report;
  if (z.s == w.s && z.p == w.p) {
    if (!contains(z).inside) {
      throw Error(ErrorKind::Domain, "distance_report: point is not in G2");
    }
    report.witness.method = WitnessMethod::Degenerate;
    report.witness.value = 0.0;
    report.tight = true;
    return report;
  }
  const CaratheodoryResult lower = caratheodory(z, w, options.sweep);
  report.caratheodory_lower = lower.value;
  report.argmax_omega = lower.argmax;
  report.witness = lempert_upper(z, w, options);
  report.lempert_upper = report.witness.value;
  report.gap = report.lempert_upper - report.caratheodory_lower;
  if (report.gap < -1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "distance_report: lower bound " << report.caratheodory_lower
        << " exceeds upper bound " << report.lempert_upper;
    throw Error(ErrorKind::Internal, msg.str());
  }
  report.tight = report.witness.has_witness && report.gap < options.tol_gap;
  return report;
}

}  // namespace sbgeo
