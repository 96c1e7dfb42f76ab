#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sbgeo/error.hpp"
#include "sbgeo/geodesic.hpp"
#include "sbgeo/polydisc.hpp"
#include "support.hpp"

using namespace sbgeo;
using doctest::Approx;

namespace {

const Complex kCubeRoot = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

double max_diff(const SymPointN& a, const SymPointN& b) {
  double worst = 0.0;
  for (int k = 0; k < a.n(); ++k) worst = std::max(worst, std::abs(a.sigma[k] - b.sigma[k]));
  return worst;
}

// Brute-force elementary symmetric polynomials over all subsets.
std::vector<Complex> elementary_brute(const std::vector<Complex>& l) {
  const int n = static_cast<int>(l.size());
  std::vector<Complex> e(n, 0.0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Complex prod = 1.0;
    int size = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        prod *= l[j];
        ++size;
      }
    }
    e[size - 1] += prod;
  }
  return e;
}

}  // namespace

TEST_CASE("pi_n values") {
  const SymPointN z = pi_n({0.3, 0.3 * kCubeRoot, 0.3 * kCubeRoot * kCubeRoot});
  CHECK(std::abs(z.sigma[0]) < 1e-15);
  CHECK(std::abs(z.sigma[1]) < 1e-15);
  CHECK(std::abs(z.sigma[2] - 0.027) < 1e-15);

  const SymPointN o = pi_n({0.0, 0.0, 0.0});
  for (const Complex& c : o.sigma) CHECK(c == 0.0);

  Rng rng(61);
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Complex> l;
    for (int j = 0; j < n; ++j) l.push_back(random_disc_point(rng, 1.0));
    const auto brute = elementary_brute(l);
    const SymPointN fast = pi_n(l);
    for (int j = 0; j < n; ++j) CHECK(std::abs(fast.sigma[j] - brute[j]) < 1e-13);
    std::reverse(l.begin(), l.end());
    CHECK(max_diff(pi_n(l), fast) < 1e-14);
  }
}

TEST_CASE("pi_n at n = 2 agrees with pi2") {
  Rng rng(62);
  for (int k = 0; k < 1000; ++k) {
    const Complex a = random_disc_point(rng, 1.0), b = random_disc_point(rng, 1.0);
    const SymPoint z = pi2(a, b);
    const SymPointN zn = pi_n({a, b});
    CHECK(std::abs(zn.sigma[0] - z.s) < 1e-15);
    CHECK(std::abs(zn.sigma[1] - z.p) < 1e-15);
  }
}

TEST_CASE("membership in the symmetrized polydisc") {
  const MembershipN m = contains_n({{0.0, 0.0, 0.027}});
  CHECK(m.inside);
  CHECK(m.margin == Approx(0.7).epsilon(1e-12));
  CHECK(std::abs(contains_n(pi_n({1.0, 0.2, -0.3})).margin) < 1e-12);

  Rng rng(63);
  for (int k = 0; k < 10000; ++k) {
    const Complex a = random_disc_point(rng, 1.2), b = random_disc_point(rng, 1.2);
    const SymPoint z = pi2(a, b);
    const Membership m2 = contains(z);
    const MembershipN mn = contains_n({{z.s, z.p}});
    if (std::abs(m2.margin) > 1e-9) CHECK(m2.inside == mn.inside);
    CHECK(std::abs(m2.margin - mn.margin) < 1e-6);
  }
}

TEST_CASE("conjectured geodesics: evaluation") {
  const ConjecturedGeodesic id(3, BlaschkeProduct(1.0, {0.0}));
  for (Complex l : {Complex(0.3, 0.1), Complex(-0.5, -0.2), Complex(0.0)}) {
    const SymPointN v = eval_conjectured(id, l);
    CHECK(std::abs(v.sigma[0]) < 1e-15);
    CHECK(std::abs(v.sigma[1]) < 1e-15);
    CHECK(std::abs(v.sigma[2] - l) < 1e-15);
  }

  const ConjecturedGeodesic sq(2, BlaschkeProduct(1.0, {0.0, 0.0}));
  const SymPoint core = eval_origin(OriginGeodesic::degree_two(1.0, 0.0), Complex(0.2, 0.3));
  const SymPointN v = eval_conjectured(sq, Complex(0.2, 0.3));
  CHECK(std::abs(v.sigma[0] - core.s) < 1e-15);
  CHECK(std::abs(v.sigma[1] - core.p) < 1e-15);

  CHECK_THROWS_AS(ConjecturedGeodesic(2, BlaschkeProduct(1.0, {0.0, 0.1, 0.2})), Error);
  CHECK_THROWS_AS(ConjecturedGeodesic(3, BlaschkeProduct(1.0, {0.1})), Error);
}

TEST_CASE("conjectured geodesics: branches, bridge and containment") {
  Rng rng(64);
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int degree = 1 + static_cast<int>(rng() % n);
    std::vector<Complex> zeros{0.0};
    for (int j = 1; j < degree; ++j) zeros.push_back(random_disc_point(rng, 0.95));
    const ConjecturedGeodesic g(n, BlaschkeProduct(random_unimodular(rng), zeros));
    const Complex l = random_disc_point(rng, 0.99);
    const SymPointN base = eval_conjectured(g, l);
    const Complex root = std::polar(std::pow(std::abs(l), 1.0 / n), std::arg(l) / n);
    for (int j = 1; j < n; ++j) {
      const Complex other = root * std::polar(1.0, 2.0 * std::numbers::pi * j / n);
      CHECK(max_diff(eval_conjectured_at_root(g, other), base) < 1e-12);
    }
    CHECK(contains_n(base).inside);
    if (n == 2) {
      const OriginGeodesic core(g.blaschke());
      const SymPoint c = eval_origin(core, l);
      CHECK(std::abs(base.sigma[0] - c.s) < 1e-10);
      CHECK(std::abs(base.sigma[1] - c.p) < 1e-10);
    }
  }
}

TEST_CASE("upper bounds through the origin") {
  GnUpperBound r = lempert_upper_origin_n({{1.0, 0.25}});
  CHECK(r.has_witness);
  CHECK(r.value == Approx(std::atanh(0.5)).epsilon(1e-10));

  r = lempert_upper_origin_n({{0.0, 0.0, 0.027}});
  CHECK(r.has_witness);
  CHECK(r.value <= std::atanh(0.027) + 1e-9);
  CHECK(r.lift_bound == Approx(std::atanh(0.3)).epsilon(1e-12));

  try {
    lempert_upper_origin_n({{0.0, 0.0, 0.0}});
    FAIL("expected degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(lempert_upper_origin_n(pi_n({1.0, 0.0, 0.0})), Error);
}

TEST_CASE("upper bounds agree with the bidisc construction at n = 2") {
  Rng rng(65);
  for (int k = 0; k < 100; ++k) {
    const SymPoint z = random_interior_point(rng);
    const GnUpperBound r = lempert_upper_origin_n({{z.s, z.p}});
    REQUIRE(r.has_witness);
    CHECK(r.value == Approx(construct_origin(z).distance()).epsilon(1e-10));
    CHECK(r.value <= r.lift_bound + 1e-10);
  }
}

TEST_CASE("upper bounds at n = 3 stay below the lift bound") {
  Rng rng(66);
  for (int k = 0; k < 20; ++k) {
    std::vector<Complex> l;
    for (int j = 0; j < 3; ++j) l.push_back(random_disc_point(rng, 0.9));
    const GnUpperBound r = lempert_upper_origin_n(pi_n(l));
    if (!r.has_witness) continue;
    CHECK(r.value <= r.lift_bound + 1e-10);
    const SymPointN hit = eval_conjectured(*r.witness, std::pow(r.sigma, 3));
    CHECK(max_diff(hit, pi_n(l)) < 1e-8);
  }
}
