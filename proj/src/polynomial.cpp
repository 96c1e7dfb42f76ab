#include "sbgeo/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "sbgeo/error.hpp"

namespace sbgeo {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  const double cutoff = rel_tol * max_abs_coeff();
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Complex(-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& a) {
  std::vector<Complex> c = a.coeffs_;
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c));
}

namespace {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Parlett-Reinsch balancing with power-of-two scalings.
void balance(CMatrix& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(const Polynomial& poly) {
  if (poly.degree() < 1) {
    throw Error(ErrorKind::Domain, "polynomial_roots: degree must be >= 1");
  }
  // Exact zero roots are split off so they come back as exact zeros.
  std::size_t zeros_at_origin = 0;
  while (poly.coeffs()[zeros_at_origin] == 0.0) ++zeros_at_origin;
  if (zeros_at_origin > 0) {
    std::vector<Complex> roots(zeros_at_origin, Complex(0.0));
    const std::vector<Complex> rest(poly.coeffs().begin() + zeros_at_origin,
                                    poly.coeffs().end());
    if (rest.size() > 1) {
      const auto more = polynomial_roots(Polynomial(rest));
      roots.insert(roots.end(), more.begin(), more.end());
    }
    return roots;
  }
  const Polynomial& p = poly;
  const int n = p.degree();
  const auto& c = p.coeffs();
  const Complex lead = c[n];
  if (n == 1) return {-c[0] / lead};

  CMatrix companion = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) companion(0, k) = -c[n - 1 - k] / lead;
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  balance(companion);

  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Internal, "polynomial_roots: eigen-solver failed");
  }
  const Polynomial dp = p.derivative();
  std::vector<Complex> roots(n);
  for (int k = 0; k < n; ++k) {
    Complex z = solver.eigenvalues()(k);
    const Complex slope = dp(z);
    if (std::abs(slope) > 0.0) {
      const Complex polished = z - p(z) / slope;
      if (std::abs(p(polished)) < std::abs(p(z))) z = polished;
    }
    roots[k] = z;
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots,
                                       double link_tol) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(roots[i] - roots[j]) <= link_tol) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> clusters;
  std::vector<std::size_t> owner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (owner[r] == n) {
      owner[r] = clusters.size();
      clusters.push_back({0.0, 0});
    }
    RootCluster& cl = clusters[owner[r]];
    cl.center += roots[i];
    ++cl.multiplicity;
  }
  for (RootCluster& cl : clusters) cl.center /= static_cast<double>(cl.multiplicity);
  return clusters;
}

Complex polish_multiple_root(const Polynomial& p, Complex start, int multiplicity) {
  Polynomial q = p;
  for (int k = 1; k < multiplicity; ++k) q = q.derivative();
  const Polynomial dq = q.derivative();
  Complex best = start;
  double best_abs = std::abs(q(start));
  Complex x = start;
  for (int iter = 0; iter < 8 && best_abs > 0.0; ++iter) {
    const Complex d = dq(x);
    if (d == 0.0) break;
    x -= q(x) / d;
    const double v = std::abs(q(x));
    if (!(v < best_abs)) break;
    best = x;
    best_abs = v;
  }
  return best;
}

}  // namespace sbgeo
