#include <doctest.h>

#include <cmath>

#include "sbgeo/caratheodory.hpp"
#include "sbgeo/error.hpp"
#include "support.hpp"

using namespace sbgeo;
using doctest::Approx;

namespace {
bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("pi2 values") {
  auto z = pi2(0.3, -0.3);
  CHECK(close(z.s, 0.0, 1e-16));
  CHECK(close(z.p, -0.09, 1e-16));
  z = pi2(0.5, 0.5);
  CHECK(close(z.s, 1.0, 1e-16));
  CHECK(close(z.p, 0.25, 1e-16));
  z = pi2(Complex(0, 0.5), 0.2);
  CHECK(close(z.s, Complex(0.2, 0.5), 1e-16));
  CHECK(close(z.p, Complex(0, 0.1), 1e-16));
}

TEST_CASE("lift recovers the roots in lexicographic order") {
  Lift l = lift({0.0, -0.09});
  CHECK(close(l.l1, -0.3, 1e-15));
  CHECK(close(l.l2, 0.3, 1e-15));
  l = lift({1.0, 0.25});
  CHECK(close(l.l1, 0.5, 1e-8));
  CHECK(close(l.l2, 0.5, 1e-8));
  l = lift({2.0, 1.0});
  CHECK(close(l.l1, 1.0, 1e-8));

  Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    const SymPoint z = random_interior_point(rng);
    const Lift m = lift(z);
    const SymPoint back = pi2(m.l1, m.l2);
    CHECK(oracle::sym_distance(back, z) < 1e-10);
    const bool ordered = m.l1.real() < m.l2.real() ||
                         (m.l1.real() == m.l2.real() && m.l1.imag() <= m.l2.imag());
    CHECK(ordered);
  }
}

TEST_CASE("membership and margin") {
  Membership m = contains({0.0, -0.09});
  CHECK(m.inside);
  CHECK(m.margin == Approx(0.7).epsilon(1e-14));
  m = contains({1.0, 0.25});
  CHECK(m.inside);
  CHECK(m.margin == Approx(0.5).epsilon(1e-7));
  m = contains({2.0, 1.0});
  CHECK_FALSE(m.inside);
  CHECK(m.margin == 0.0);
  CHECK_FALSE(contains({0.0, 1.2}).inside);
}

TEST_CASE("royal variety membership") {
  CHECK(on_royal_variety({1.0, 0.25}));
  CHECK(on_royal_variety({0.0, 0.0}));
  CHECK_FALSE(on_royal_variety({0.0, -0.09}));
  CHECK_FALSE(on_royal_variety({2.0, 1.0}));  // on the boundary, |s| = 2
}

TEST_CASE("royal automorphisms") {
  const RoyalAutomorphism b(0.5);
  SymPoint z = b({0.0, 0.0});
  CHECK(close(z.s, 1.0, 1e-15));
  CHECK(close(z.p, 0.25, 1e-15));
  z = b({1.0, 0.25});
  CHECK(std::abs(z.s) < 1e-8);
  CHECK(std::abs(z.p) < 1e-15);

  Rng rng(32);
  for (int k = 0; k < 1000; ++k) {
    const Complex a = random_disc_point(rng, 0.9);
    const SymPoint x = random_interior_point(rng);
    const RoyalAutomorphism ba(a);
    CHECK(oracle::sym_distance(ba(ba(x)), x) < 1e-12);
    CHECK(oracle::sym_distance(ba(x), oracle::royal_closed_form(a, x)) < 1e-12);
    CHECK(contains(ba(x)).inside);
  }
}

TEST_CASE("extremal functions") {
  CHECK(close(extremal_eval(ExtremalParam::zero(), {0.0, -0.09}).value(), -0.09, 1e-16));
  CHECK(close(extremal_eval(ExtremalParam::unit(1.0), {1.0, 0.25}).value(), -0.5, 1e-15));
  CHECK(std::abs(extremal_eval(ExtremalParam::unit(1.0), {0.4, 0.0}).value()) ==
        Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(extremal_eval(ExtremalParam::unit(1.0), {2.0, 1.0}), Error);
  CHECK_THROWS_AS(ExtremalParam::unit(0.5), Error);

  // F_omega maps G2 into the disc.
  Rng rng(33);
  for (int k = 0; k < 1000; ++k) {
    const SymPoint x = random_interior_point(rng, 0.999);
    const auto omega = ExtremalParam::make(random_unimodular(rng));
    CHECK(std::abs(extremal_eval(omega, x).value()) < 1.0);
  }
}

TEST_CASE("random interior points") {
  const SymPoint a = random_interior_point(std::uint64_t{5});
  const SymPoint b = random_interior_point(std::uint64_t{5});
  CHECK(a.s == b.s);
  CHECK(a.p == b.p);
  const SymPoint o = random_interior_point(std::uint64_t{5}, 0.0);
  CHECK(o.s == 0.0);
  CHECK(o.p == 0.0);
  Rng rng(34);
  for (int k = 0; k < 1000; ++k) CHECK(contains(random_interior_point(rng)).inside);
}

TEST_CASE("Caratheodory sweep spot values") {
  const auto r = caratheodory({0.0, 0.0}, {1.0, 0.25});
  CHECK(r.value == Approx(std::atanh(0.5)).epsilon(1e-12));
  const auto q = caratheodory({0.0, 0.0}, {0.0, -0.09});
  CHECK(q.value == Approx(std::atanh(0.09)).epsilon(1e-12));
  CHECK(q.argmax.is_zero());
  CHECK(caratheodory({0.3, 0.01}, {0.3, 0.01}).value == 0.0);
  CHECK_THROWS_AS(caratheodory({2.0, 1.0}, {0.0, 0.0}), Error);
}

TEST_CASE("Caratheodory sweep dominates a brute-force grid") {
  Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    const SymPoint z = random_interior_point(rng), w = random_interior_point(rng);
    const double sweep = caratheodory(z, w).value;
    const double brute = oracle::caratheodory_brute(z, w, 1 << 14);
    CHECK(sweep >= brute - 1e-12);
    CHECK(sweep <= brute + 1e-6);
  }
}

TEST_CASE("Caratheodory sweep is invariant under royal automorphisms") {
  Rng rng(36);
  for (int k = 0; k < 50; ++k) {
    const Complex a = random_disc_point(rng, 0.8);
    const SymPoint z = random_interior_point(rng), w = random_interior_point(rng);
    const RoyalAutomorphism b(a);
    CHECK(caratheodory(b(z), b(w)).value ==
          Approx(caratheodory(z, w).value).epsilon(1e-8));
  }
}
