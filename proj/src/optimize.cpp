#include "sbgeo/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <vector>

namespace sbgeo::optimize {

GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;  // bracket exhausted at machine precision
  }
  return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

MinimizeResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x0,
    const NelderMeadOptions& options) {
  const Eigen::Index n = x0.size();
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += options.initial_step;
  for (Eigen::Index i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second = order[n - 1];
    if (vals[best] <= options.f_target) break;
    double size = 0.0;
    for (Eigen::Index i = 0; i <= n; ++i) {
      size = std::max(size, (pts[i] - pts[best]).lpNorm<Eigen::Infinity>());
    }
    if (size < options.simplex_tol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (static_cast<std::size_t>(i) != worst) centroid += pts[i];
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
    const double f_reflected = f(reflected);
    if (f_reflected < vals[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        pts[worst] = expanded;
        vals[worst] = f_expanded;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < vals[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(f_reflected, vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = f_contracted;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (static_cast<std::size_t>(i) == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
    }
  }
  const auto best_it = std::min_element(vals.begin(), vals.end());
  const std::size_t best = static_cast<std::size_t>(best_it - vals.begin());
  return {pts[best], vals[best], iter};
}

MinimizeResult levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& r,
    Eigen::VectorXd x, const LevenbergMarquardtOptions& options) {
  Eigen::VectorXd res = r(x);
  double norm = res.norm();
  double damping = 1e-3;
  int iter = 0;
  for (; iter < options.max_iter && norm > options.residual_target; ++iter) {
    Eigen::MatrixXd jac(res.size(), x.size());
    bool jac_ok = true;
    for (Eigen::Index j = 0; j < x.size() && jac_ok; ++j) {
      Eigen::VectorXd xp = x, xm = x;
      xp[j] += options.fd_step;
      xm[j] -= options.fd_step;
      try {
        jac.col(j) = (r(xp) - r(xm)) / (2.0 * options.fd_step);
      } catch (const std::exception&) {
        jac_ok = false;
      }
    }
    if (!jac_ok) break;
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * res;
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Eigen::MatrixXd lhs = jtj;
      lhs.diagonal().array() += damping * (1.0 + jtj.diagonal().array());
      const Eigen::VectorXd step = lhs.ldlt().solve(-jtr);
      const Eigen::VectorXd candidate = x + step;
      try {
        const Eigen::VectorXd cand_res = r(candidate);
        const double cand_norm = cand_res.norm();
        if (std::isfinite(cand_norm) && cand_norm < norm) {
          x = candidate;
          res = cand_res;
          norm = cand_norm;
          damping = std::max(damping * 0.1, 1e-15);
          improved = true;
          break;
        }
      } catch (const std::exception&) {
      }
      damping *= 10.0;
    }
    if (!improved) break;
  }
  return {x, norm, iter};
}

}  // namespace sbgeo::optimize
