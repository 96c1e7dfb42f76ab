#include <doctest.h>

#include <cmath>

#include "sbgeo/error.hpp"
#include "sbgeo/geodesic.hpp"
#include "support.hpp"

using namespace sbgeo;
using doctest::Approx;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

// Coefficients (tau, second zero) of a canonical origin geodesic.
std::pair<Complex, Complex> coefficients(const OriginGeodesic& g) {
  return {g.tau(), g.alpha()};
}

DiscAutomorphism random_automorphism(Rng& rng, double r = 0.9) {
  return {random_unimodular(rng), random_disc_point(rng, r)};
}

// (tau, alpha) with |1 - tau| <= 2|alpha| (root-free normalized maps).
DiscAutomorphism random_rootfree(Rng& rng) {
  for (;;) {
    const DiscAutomorphism g(random_unimodular(rng), random_disc_point(rng, 0.95));
    if (std::abs(1.0 - g.tau()) < 2.0 * std::abs(g.alpha()) - 1e-6) return g;
  }
}

}  // namespace

TEST_CASE("origin geodesic evaluation") {
  const auto id = OriginGeodesic::degree_one(1.0);
  SymPoint z = eval_origin(id, 0.3);
  CHECK(close(z.s, 0.0, 1e-16));
  CHECK(close(z.p, -0.3, 1e-16));

  const auto g = OriginGeodesic::degree_two(1.0, 0.5);
  z = eval_origin(g, 0.25);
  CHECK(close(z.s, 0.4, 1e-15));
  CHECK(close(z.p, 0.0, 1e-16));

  for (const auto& h : {id, g}) {
    z = eval_origin(h, 0.0);
    CHECK(z.s == 0.0);
    CHECK(z.p == 0.0);
  }
  CHECK_THROWS_AS(eval_origin(g, 1.5), Error);
  CHECK_THROWS_AS(OriginGeodesic(BlaschkeProduct(1.0, {0.1})), Error);
  CHECK_THROWS_AS(OriginGeodesic(BlaschkeProduct(1.0, {0.0, 0.1, 0.2})), Error);
}

TEST_CASE("closed form agrees with both square-root branches") {
  Rng rng(41);
  for (int k = 0; k < 2000; ++k) {
    const auto g = k % 3 == 0
                       ? OriginGeodesic::degree_one(random_unimodular(rng))
                       : OriginGeodesic::degree_two(random_unimodular(rng),
                                                    random_disc_point(rng, 0.95));
    const Complex l = random_disc_point(rng, 1.0);
    const SymPoint a = eval_origin(g, l);
    CHECK(oracle::sym_distance(a, eval_origin_branch(g, l, false)) < 1e-12);
    CHECK(oracle::sym_distance(a, eval_origin_branch(g, l, true)) < 1e-12);
  }
}

TEST_CASE("construction through the origin: spot values") {
  auto c = construct_origin({0.0, -0.09});
  CHECK(c.geodesic.degree() == 1);
  CHECK(c.sigma == Approx(0.3).epsilon(1e-12));
  CHECK(c.distance() == Approx(0.0902441878561469).epsilon(1e-12));

  c = construct_origin({1.0, 0.25});
  CHECK(c.geodesic.degree() == 2);
  CHECK(c.sigma * c.sigma == Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(c.geodesic.alpha()) < 1e-9);
  CHECK(c.distance() == Approx(std::atanh(0.5)).epsilon(1e-12));

  c = construct_origin({0.4, 0.0});
  CHECK(c.sigma == Approx(0.5).epsilon(1e-12));
  CHECK(close(c.geodesic.tau(), 1.0, 1e-9));
  CHECK(close(c.geodesic.alpha(), 0.5, 1e-9));

  try {
    construct_origin({0.0, 0.0});
    FAIL("expected a degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(construct_origin({2.0, 1.0}), Error);
}

TEST_CASE("construction through the origin: round trip and uniqueness") {
  Rng rng(42);
  for (int k = 0; k < 300; ++k) {
    const SymPoint target = random_interior_point(rng);
    const auto c = construct_origin(target);
    const SymPoint hit = eval_origin(c.geodesic, c.sigma * c.sigma);
    CHECK(oracle::sym_distance(hit, target) < 1e-9);

    OriginOptions swapped;
    swapped.swap_lift = true;
    const auto [t1, a1] = coefficients(c.geodesic);
    const auto [t2, a2] = coefficients(construct_origin(target, swapped).geodesic);
    CHECK(close(t1, t2, 1e-9));
    CHECK(close(a1, a2, 1e-9));

    // The geodesic distance is the Caratheodory distance.
    CHECK(caratheodory({0.0, 0.0}, target).value ==
          Approx(c.distance()).epsilon(1e-9));
  }
}

TEST_CASE("closed-form certificates for origin geodesics") {
  Certificate cert = certificate_origin(OriginGeodesic::degree_one(1.0));
  CHECK(cert.omega.is_zero());
  CHECK(close(cert.rotation(0.3), -0.3, 1e-16));

  const auto square = OriginGeodesic::degree_two(1.0, 0.0);
  cert = certificate_origin(square);
  CHECK(close(cert.omega.omega(), 1.0, 1e-16));
  CHECK(close(cert.rotation(0.3), -0.3, 1e-16));
  // F_1(2l, l^2) = -l, computed by hand.
  CHECK(close(detail::extremal_unchecked(1.0, {0.6, 0.09}), -0.3, 1e-16));

  const auto g = OriginGeodesic::degree_two(1.0, 0.5);
  cert = certificate_origin(g);
  CHECK(close(cert.omega.omega(), 1.0, 1e-15));
  CHECK(std::abs(extremal_eval(cert.omega, eval_origin(g, 0.25)).value()) ==
        Approx(0.25).epsilon(1e-14));

  Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    const auto h = OriginGeodesic::degree_two(random_unimodular(rng),
                                              random_disc_point(rng, 0.95));
    CHECK(verify_certificate(h, certificate_origin(h)) < 1e-12);
  }
}

TEST_CASE("geodesics through a royal point") {
  SymPoint w{0.0, -0.09};
  auto t = construct_through_royal({0.0, 0.0}, w);
  CHECK(t.distance() == Approx(std::atanh(0.09)).epsilon(1e-12));
  CHECK(oracle::sym_distance(eval(t.geodesic, 0.0), {0.0, 0.0}) < 1e-15);
  CHECK(oracle::sym_distance(eval(t.geodesic, t.sigma * t.sigma), w) < 1e-12);

  t = construct_through_royal({1.0, 0.25}, {0.0, 0.0});
  CHECK(oracle::sym_distance(eval(t.geodesic, 0.0), {1.0, 0.25}) < 1e-8);
  CHECK(oracle::sym_distance(eval(t.geodesic, t.sigma * t.sigma), {0.0, 0.0}) < 1e-9);
  CHECK(t.distance() == Approx(std::atanh(0.5)).epsilon(1e-9));

  // Naturality: transporting the (0, -0.09) example by B_{0.5}.
  const SymPoint moved = RoyalAutomorphism(0.5)(w);
  t = construct_through_royal({1.0, 0.25}, moved);
  CHECK(t.distance() == Approx(std::atanh(0.09)).epsilon(1e-9));
  CHECK(oracle::sym_distance(eval(t.geodesic, t.sigma * t.sigma), moved) < 1e-9);

  CHECK_THROWS_AS(construct_through_royal({0.0, -0.09}, {1.0, 0.25}), Error);
}

TEST_CASE("root-free test: inequality against the quadratic") {
  const DiscAutomorphism id = DiscAutomorphism::identity();
  CHECK(flat_rootfree_check(id, DiscAutomorphism(1.0, 0.5)));

  const DiscAutomorphism neg(-1.0, 0.3);
  CHECK_FALSE(flat_rootfree_check(id, neg));
  const RootFreeReport r = rootfree_report(id, neg);
  double inside = 2.0;
  for (const Complex& x : r.roots) inside = std::min(inside, std::abs(x));
  CHECK(inside == Approx(0.153536).epsilon(1e-5));
  // 0.3 l^2 - 2 l + 0.3 = 0, smaller root.
  CHECK(inside == Approx((2.0 - std::sqrt(4.0 - 0.36)) / 0.6).epsilon(1e-14));

  CHECK_FALSE(flat_rootfree_check(id, DiscAutomorphism::rotation(std::polar(1.0, 0.01))));
  CHECK_THROWS_AS(flat_rootfree_check(id, id), Error);

  Rng rng(44);
  int checked = 0;
  while (checked < 2000) {
    const auto f1 = random_automorphism(rng), f2 = random_automorphism(rng);
    const RootFreeReport rep = rootfree_report(f1, f2);
    if (std::abs(rep.inequality_margin) < 1e-9) continue;
    CHECK(rep.by_inequality == rep.by_quadratic);
    ++checked;
  }
}

TEST_CASE("flat geodesic construction") {
  const SymPoint z{-0.5, 0.0}, w{0.5, 0.0};
  const FlatConstruction fc = construct_flat(z, w);
  CHECK(fc.lambda2 == Approx(0.5).epsilon(1e-14));
  CHECK(oracle::sym_distance(eval(fc.geodesic, 0.0), z) < 1e-14);
  CHECK(oracle::sym_distance(eval(fc.geodesic, fc.lambda2), w) < 1e-14);
  CHECK(fc.distance() == Approx(std::atanh(0.5)).epsilon(1e-14));

  try {
    construct_flat({0.0, 0.0}, {0.9, 0.0});
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleUnbalanced);
  }
  try {
    construct_flat(z, z);
    FAIL("expected degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("flat certificate: hand-evaluated pair") {
  const FlatGeodesic g{DiscAutomorphism::identity(), DiscAutomorphism(1.0, 0.5)};
  const SymPoint a = eval(Geodesic{g}, 0.0), b = eval(Geodesic{g}, 0.5);
  const Complex fa = extremal_eval(ExtremalParam::unit(1.0), a).value();
  const Complex fb = extremal_eval(ExtremalParam::unit(1.0), b).value();
  CHECK(close(fa, 0.2, 1e-15));
  CHECK(close(fb, -1.0 / 3.0, 1e-15));
  CHECK(oracle::pseudo_hyperbolic(fa, fb) == Approx(0.5).epsilon(1e-14));

  CHECK(flat_derivative_ratio(DiscAutomorphism(1.0, 0.5), 1.0) ==
        Approx(1.0).epsilon(1e-14));
  const Certificate cert = certificate_flat(g);
  CHECK(cert.ratio >= 1.0 - 1e-12);
  CHECK(verify_certificate(Geodesic{g}, cert) < 1e-10);
}

TEST_CASE("flat certificate: boundary case of the root-free inequality") {
  const double a = 0.5;
  const Complex tau(1.0 - 2.0 * a * a, 2.0 * a * std::sqrt(1.0 - a * a));
  const DiscAutomorphism f2(tau, a);
  CHECK(std::abs(std::abs(1.0 - tau) - 2.0 * a) < 1e-15);
  const Certificate cert = certificate_flat({DiscAutomorphism::identity(), f2});
  const Complex reduced(-0.5, std::sqrt(0.75));
  CHECK(close(cert.omega.omega(), std::conj(reduced) * tau, 1e-12));
  CHECK(cert.ratio == Approx(1.0).epsilon(1e-12));
  CHECK(verify_certificate(FlatGeodesic{DiscAutomorphism::identity(), f2}, cert) < 1e-9);
}

TEST_CASE("flat certificate: random root-free maps and the negative control") {
  Rng rng(45);
  for (int k = 0; k < 100; ++k) {
    const auto f1 = random_automorphism(rng);
    const FlatGeodesic g{f1, compose(random_rootfree(rng), f1)};
    const Certificate cert = certificate_flat(g);
    CHECK(cert.ratio >= 1.0 - 1e-8);
    CHECK(verify_certificate(g, cert) < 1e-6);
  }
  try {
    certificate_flat({DiscAutomorphism::identity(), DiscAutomorphism(-1.0, 0.3)});
    FAIL("expected certification failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CertificationFailure);
  }
}

TEST_CASE("royal variety intersections") {
  auto r = royal_intersection_class(OriginGeodesic::degree_two(1.0, 0.0));
  CHECK(r.kind == RoyalIntersection::Kind::Whole);
  r = royal_intersection_class(OriginGeodesic::degree_one(1.0));
  CHECK(r.kind == RoyalIntersection::Kind::SinglePoint);
  CHECK(std::abs(r.lambda0) < 1e-12);
  r = royal_intersection_class(FlatGeodesic{DiscAutomorphism::identity(),
                                            DiscAutomorphism(1.0, 0.5)});
  CHECK(r.kind == RoyalIntersection::Kind::Empty);

  Rng rng(46);
  for (int k = 0; k < 300; ++k) {
    const auto g = OriginGeodesic::degree_two(random_unimodular(rng),
                                              random_disc_point(rng, 0.95));
    r = royal_intersection_class(g);
    CHECK(r.kind == RoyalIntersection::Kind::SinglePoint);
    CHECK(std::abs(r.lambda0) < 1e-9);
    const Complex a = random_disc_point(rng, 0.9);
    const TransportedGeodesic t{a, g};
    r = royal_intersection_class(t);
    REQUIRE(r.kind == RoyalIntersection::Kind::SinglePoint);
    CHECK(on_royal_variety(eval(t, r.lambda0), 1e-8));
  }
}

TEST_CASE("boundary values lie on the distinguished boundary") {
  auto rows = boundary_trace(OriginGeodesic::degree_one(1.0), 256);
  REQUIRE(rows.size() == 256);
  for (const auto& row : rows) {
    CHECK(row.modulus1 == Approx(1.0).epsilon(1e-9));
    CHECK(row.modulus2 == Approx(1.0).epsilon(1e-9));
    CHECK(close(row.value.p, -std::polar(1.0, row.theta), 1e-14));
  }
  rows = boundary_trace(OriginGeodesic::degree_two(1.0, 0.0), 64);
  for (const auto& row : rows) {
    CHECK(row.modulus1 == Approx(1.0).epsilon(1e-9));
    CHECK(row.modulus2 == Approx(1.0).epsilon(1e-9));
  }
  Rng rng(47);
  for (int k = 0; k < 50; ++k) {
    const FlatGeodesic g{random_automorphism(rng), random_automorphism(rng)};
    for (const auto& row : boundary_trace(g, 64)) {
      CHECK(row.modulus1 == Approx(1.0).epsilon(1e-9));
      CHECK(row.modulus2 == Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("verification against the Caratheodory sweep") {
  const auto c = construct_origin({1.0, 0.25});
  VerifyReport rep = verify_geodesic(Geodesic{c.geodesic}, {{0.0, 0.5}}, 1e-6);
  CHECK(rep.passed);
  CHECK(rep.worst_deviation <= 1e-6);

  rep = verify_geodesic(Geodesic{c.geodesic}, {{0.3, 0.3}}, 1e-6);
  CHECK(rep.pairs[0].caratheodory == 0.0);
  CHECK(rep.pairs[0].poincare == 0.0);

  const AnalyticDisc corrupted = [](Complex l) { return pi2(l, 0.5 * l); };
  rep = verify_geodesic(corrupted, {{0.0, 0.5}, {-0.3, 0.6}}, 1e-6);
  CHECK_FALSE(rep.passed);
}
