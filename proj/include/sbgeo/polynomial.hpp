#pragma once

// Dense univariate polynomials with complex coefficients and a
// companion-matrix root finder.

#include <vector>

#include "sbgeo/disc.hpp"

namespace sbgeo {

/// Coefficients in ascending order: c[0] + c[1] x + ... + c[n] x^n.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// x - root
  static Polynomial linear_root(Complex root) { return Polynomial({-root, 1.0}); }

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  /// Degree after dropping exact trailing zeros; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double max_abs_coeff() const;

  Complex operator()(Complex x) const;
  Polynomial derivative() const;

  /// Drops leading coefficients with modulus <= rel_tol * max_abs_coeff().
  Polynomial trimmed(double rel_tol) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& a);

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

/// All complex roots of p (degree >= 1 after the caller's trimming).
/// Eigenvalues of the balanced companion matrix, followed by one Newton
/// polish step per root that is kept only when it reduces |p|.
std::vector<Complex> polynomial_roots(const Polynomial& p);

struct RootCluster {
  Complex center;
  int multiplicity;
};

/// Groups numerically split multiple roots. Roots closer than link_tol are
/// linked; each cluster is represented by its centroid, which is far more
/// accurate than the individual members for a multiple root.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots,
                                       double link_tol);

/// Newton iteration on the (multiplicity - 1)-th derivative, where a root of
/// that multiplicity is simple. Returns the better of the start and the result.
Complex polish_multiple_root(const Polynomial& p, Complex start, int multiplicity);

}  // namespace sbgeo
