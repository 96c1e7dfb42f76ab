#include "sbgeo/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sbgeo/error.hpp"
#include "sbgeo/optimize.hpp"

namespace sbgeo {

namespace {

// Improvements below this (in the pseudo-hyperbolic ratio) count as ties.
constexpr double kTieEps = 1e-15;

double ratio_at(const SymPoint& z, const SymPoint& w, Complex omega) {
  return detail::mobius_unchecked(detail::extremal_unchecked(omega, z),
                                  detail::extremal_unchecked(omega, w));
}

}  // namespace

CaratheodoryResult caratheodory(const SymPoint& z, const SymPoint& w,
                                const SweepOptions& options) {
  if (!contains(z).inside || !contains(w).inside) {
    throw Error(ErrorKind::Domain, "caratheodory: both points must lie in G2");
  }
  if (options.grid < 16) {
    throw Error(ErrorKind::Domain, "caratheodory: grid size must be >= 16");
  }
  const int n = options.grid;
  const double step = 2.0 * std::numbers::pi / n;

  double best = ratio_at(z, w, 0.0);
  bool best_is_zero = true;
  double best_angle = 0.0;

  std::vector<double> values(n);
  for (int k = 0; k < n; ++k) {
    values[k] = ratio_at(z, w, std::polar(1.0, k * step));
    if (values[k] > best + kTieEps) {
      best = values[k];
      best_is_zero = false;
      best_angle = k * step;
    }
  }

  // Cyclic local maxima, ranked by value; ties go to the smaller index.
  std::vector<int> peaks;
  for (int k = 0; k < n; ++k) {
    const double left = values[(k + n - 1) % n], right = values[(k + 1) % n];
    if (values[k] >= left && values[k] >= right) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  if (static_cast<int>(peaks.size()) > options.refine_brackets) {
    peaks.resize(options.refine_brackets);
  }
  std::sort(peaks.begin(), peaks.end());

  for (int k : peaks) {
    const auto refined = optimize::golden_section_max(
        [&](double theta) { return ratio_at(z, w, std::polar(1.0, theta)); },
        (k - 1) * step, (k + 1) * step, options.angle_tol);
    if (refined.value > best + kTieEps) {
      best = refined.value;
      best_is_zero = false;
      best_angle = std::fmod(refined.x + 2.0 * std::numbers::pi,
                             2.0 * std::numbers::pi);
    }
  }

  CaratheodoryResult result;
  result.value = std::atanh(std::min(best, 1.0));
  result.argmax =
      best_is_zero ? ExtremalParam::zero() : ExtremalParam::from_angle(best_angle);
  return result;
}

}  // namespace sbgeo
