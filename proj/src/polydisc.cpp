#include "sbgeo/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sbgeo/error.hpp"
#include "sbgeo/optimize.hpp"
#include "sbgeo/polynomial.hpp"

namespace sbgeo {

SymPointN pi_n(const std::vector<Complex>& l) {
  // e[k] is the k-th elementary symmetric value of the roots seen so far.
  std::vector<Complex> e(l.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += l[j] * e[k - 1];
  }
  return SymPointN{std::vector<Complex>(e.begin() + 1, e.end())};
}

MembershipN contains_n(const SymPointN& z) {
  const int n = z.n();
  MembershipN out;
  if (n == 0) {
    out.inside = true;
    out.margin = 1.0;
    return out;
  }
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  for (int j = 1; j <= n; ++j) {
    c[n - j] = (j % 2 == 0 ? 1.0 : -1.0) * z.sigma[j - 1];
  }
  out.roots = polynomial_roots(Polynomial(std::move(c)));
  double rmax = 0.0;
  for (const Complex& r : out.roots) rmax = std::max(rmax, std::abs(r));
  out.margin = 1.0 - rmax;
  out.inside = rmax < 1.0;
  return out;
}

ConjecturedGeodesic::ConjecturedGeodesic(int n, BlaschkeProduct b)
    : n_(n), b_(std::move(b)) {
  if (n < 2) throw Error(ErrorKind::Domain, "conjectured geodesic needs n >= 2");
  if (b_.degree() < 1 || b_.degree() > n) {
    throw Error(ErrorKind::Domain, "Blaschke degree must lie in 1..n");
  }
  if (std::abs(b_.eval(0.0)) != 0.0) {
    throw Error(ErrorKind::Domain, "Blaschke product must vanish at 0");
  }
}

SymPointN eval_conjectured_at_root(const ConjecturedGeodesic& g, Complex root) {
  const int n = g.n();
  std::vector<Complex> values(n);
  for (int k = 0; k < n; ++k) {
    const Complex eps = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    values[k] = g.blaschke().eval(eps * root);
  }
  return pi_n(values);
}

SymPointN eval_conjectured(const ConjecturedGeodesic& g, Complex lambda) {
  const int n = g.n();
  if (std::abs(lambda) > 1.0) {
    throw Error(ErrorKind::Domain, "eval_conjectured: |lambda| > 1");
  }
  const Complex root =
      std::polar(std::pow(std::abs(lambda), 1.0 / n), std::arg(lambda) / n);
  const SymPointN a = eval_conjectured_at_root(g, root);
  const SymPointN b = eval_conjectured_at_root(
      g, root * std::polar(1.0, 2.0 * std::numbers::pi / n));
  for (int k = 0; k < n; ++k) {
    if (std::abs(a.sigma[k] - b.sigma[k]) > 1e-10) {
      throw Error(ErrorKind::Internal, "eval_conjectured: branches disagree");
    }
  }
  return a;
}

namespace {

// Unconstrained coordinates -> (B, sigma). x = (theta, sigma logit, zeros...).
struct Decoded {
  BlaschkeProduct b;
  double sigma;
};

Complex squash(double u, double v) {
  const double r = std::hypot(u, v);
  if (r == 0.0) return 0.0;
  return Complex(u, v) * (std::tanh(r) / r);
}

Decoded decode(const Eigen::VectorXd& x, int degree) {
  std::vector<Complex> zeros{0.0};
  for (int k = 1; k < degree; ++k) {
    zeros.push_back(squash(x[2 * k], x[2 * k + 1]));
  }
  const double sigma = 1.0 / (1.0 + std::exp(-x[1]));
  return {BlaschkeProduct(std::polar(1.0, x[0]), std::move(zeros)), sigma};
}

struct FitOutcome {
  Eigen::VectorXd x;
  double residual = std::numeric_limits<double>::infinity();
};

FitOutcome fit_degree(const SymPointN& target, int degree, double sigma_guess,
                      const GnFitOptions& options) {
  const int n = target.n();
  auto residual = [&](const Eigen::VectorXd& x) {
    const Decoded d = decode(x, degree);
    if (!(d.sigma < 1.0)) throw Error(ErrorKind::Domain, "sigma reached 1");
    const ConjecturedGeodesic g(n, d.b);
    const SymPointN v = eval_conjectured_at_root(g, d.sigma);
    Eigen::VectorXd r(2 * n);
    for (int k = 0; k < n; ++k) {
      const Complex diff = v.sigma[k] - target.sigma[k];
      r[2 * k] = diff.real();
      r[2 * k + 1] = diff.imag();
    }
    return r;
  };
  auto objective = [&](const Eigen::VectorXd& x) {
    try {
      return residual(x).squaredNorm();
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  const int free_zeros = degree - 1;
  const int starts = options.starts_per_zero * std::max(1, free_zeros);
  const double logit = std::log(sigma_guess / (1.0 - sigma_guess));
  optimize::NelderMeadOptions nm;
  nm.max_iter = options.max_iter;
  nm.f_target = options.residual_target * options.residual_target;

  FitOutcome best;
  for (int k = 0; k < starts; ++k) {
    Eigen::VectorXd x0(2 * degree);
    x0[0] = 2.0 * std::numbers::pi * (k + 0.5) / starts;
    x0[1] = logit;
    for (int j = 1; j < degree; ++j) {
      // atanh of the radii {0.3, 0.6}, angles spread over the lattice
      const double r = (k + j) % 2 == 0 ? 0.3095196 : 0.6931472;
      const double angle = 2.0 * std::numbers::pi * (k * j + 0.25 * j) / starts +
                           std::numbers::pi * (k % 2);
      x0[2 * j] = r * std::cos(angle);
      x0[2 * j + 1] = r * std::sin(angle);
    }
    if (!std::isfinite(objective(x0))) continue;
    Eigen::VectorXd x = optimize::nelder_mead(objective, x0, nm).x;
    try {
      x = optimize::levenberg_marquardt(residual, x).x;
    } catch (const Error&) {
    }
    const double res = std::sqrt(objective(x));
    if (res < best.residual) {
      best.x = x;
      best.residual = res;
    }
    if (best.residual <= 1e-14) break;
  }
  return best;
}

}  // namespace

GnUpperBound lempert_upper_origin_n(const SymPointN& target,
                                    const GnFitOptions& options) {
  const int n = target.n();
  if (n < 2) throw Error(ErrorKind::Domain, "lempert_upper_origin_n needs n >= 2");
  const MembershipN m = contains_n(target);
  if (!m.inside) throw Error(ErrorKind::Domain, "target is not in Gn");
  if (std::all_of(target.sigma.begin(), target.sigma.end(),
                  [](Complex c) { return c == 0.0; })) {
    throw Error(ErrorKind::Degenerate, "target is the origin");
  }

  GnUpperBound out;
  const double rmax = 1.0 - m.margin;
  out.lift_bound = std::atanh(rmax);
  out.value = out.lift_bound;

  // phi(sigma^n) has lifts B(e_k sigma) of modulus <= sigma, so sigma >= rmax.
  const double guess = std::clamp(std::sqrt(rmax), 0.05, 0.95);
  for (int degree = 1; degree <= n; ++degree) {
    const FitOutcome fit = fit_degree(target, degree, guess, options);
    if (!(fit.residual <= options.success_residual)) continue;
    const Decoded d = decode(fit.x, degree);
    const double value = std::atanh(std::pow(d.sigma, n));
    if (!out.has_witness || value < out.value) {
      out.value = value;
      out.has_witness = true;
      out.witness = ConjecturedGeodesic(n, d.b);
      out.sigma = d.sigma;
      out.degree = degree;
      out.residual = fit.residual;
    }
  }
  return out;
}

}  // namespace sbgeo
