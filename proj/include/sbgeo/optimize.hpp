#pragma once

// Small deterministic optimizers shared by the geodesic searches.

#include <Eigen/Dense>
#include <functional>

namespace sbgeo::optimize {

struct GoldenResult {
  double x;
  double value;
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is narrower than tol.
GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double tol);

struct NelderMeadOptions {
  int max_iter = 20000;
  double f_target = 0.0;      // stop once f <= f_target
  double initial_step = 0.25;
  double simplex_tol = 1e-14; // stop once the simplex collapses
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

MinimizeResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x0,
    const NelderMeadOptions& options = {});

struct LevenbergMarquardtOptions {
  int max_iter = 100;
  double residual_target = 1e-15;
  double fd_step = 1e-7;
};

/// Minimizes |r(x)|^2 using a central-difference Jacobian. A step is rejected
/// (and damping increased) when r throws or does not decrease the norm.
MinimizeResult levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& r,
    Eigen::VectorXd x0, const LevenbergMarquardtOptions& options = {});

}  // namespace sbgeo::optimize
