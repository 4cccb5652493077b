#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "excentric/angle.hpp"
#include "excentric/errors.hpp"
#include "excentric/integral.hpp"
#include "excentric/quadrature.hpp"
#include "excentric/verify.hpp"

using namespace excentric;
using doctest::Approx;

TEST_CASE("closed forms") {
  CHECK(poisson_closed(ExCenter(0.0, 0.0)).value == Approx(kTwoPi));
  CHECK(poisson_closed(ExCenter(0.5, 0.3)).value == Approx(8.0 * kPi / 3.0));
  CHECK(poisson_closed(ExCenter(2.0, 0.0)).value == Approx(2.0 * kPi / 3.0));
  CHECK(poisson_closed(ExCenter(-2.0, 1.0)).value == Approx(2.0 * kPi / 3.0));
  CHECK(poisson_closed(ExCenter(0.5, 0.0)).method == Method::ClosedForm);

  for (double k : {1.0, -1.0}) {
    const auto p = poisson_closed(ExCenter(k, 0.2));
    CHECK(p.value == 0.0);
    CHECK(p.method == Method::PrincipalValue);
    const auto i1 = i1_closed(ExCenter(k, 0.2));
    CHECK(i1.value == Approx(kPi));
    CHECK(i1.method == Method::PrincipalValue);
    CHECK(i2_closed(ExCenter(k, 0.2)).method == Method::PrincipalValue);
  }

  CHECK(i1_closed(ExCenter(0.5, 0.0)).value == Approx(kTwoPi));
  CHECK(i1_closed(ExCenter(3.0, 0.0)).value == 0.0);
  CHECK(i2_closed(ExCenter(3.0, -1.5708)).value == 0.0);
  CHECK(i2_closed(ExCenter(3.0, -1.5708)).method == Method::ClosedForm);
}

TEST_CASE("antiderivatives at fixed points") {
  const ExCenter e(0.5, 0.0);
  CHECK(poisson_antiderivative(0.0, e) == 0.0);
  // beta(pi/3) = pi/6 -> (pi/3 + pi/3) / 0.75
  CHECK(poisson_antiderivative(kPi / 3.0, e) == Approx((2.0 * kPi / 3.0) / 0.75));
  CHECK(i1_antiderivative(kPi / 3.0, e) == Approx(kPi / 2.0));
  CHECK(i2_antiderivative(kPi, e) == Approx(std::log(1.5)));
  CHECK(i2_antiderivative(0.0, e) == Approx(std::log(0.5)));

  CHECK_THROWS_AS(poisson_antiderivative(0.3, ExCenter(1.0, 0.0)), Singularity);
  CHECK_THROWS_AS(i2_antiderivative(0.0, ExCenter(1.0, 0.0)), Singularity);
  CHECK(i1_antiderivative(0.0, ExCenter(1.0, 0.0)) == Approx(kPi / 2.0));
}

TEST_CASE("integrand definitions") {
  const ExCenter e(0.5, 0.0);
  CHECK(integrand(IntegralKind::Poisson, 0.0, e) == Approx(4.0));
  CHECK(integrand(IntegralKind::I1, 0.0, e) == Approx(2.0));
  CHECK(integrand(IntegralKind::I2, 0.0, e) == 0.0);
  CHECK(integrand(IntegralKind::I2, kPi / 2.0, e) == Approx(0.5 / 1.25));
}

TEST_CASE("lifted antiderivatives reproduce the full-period closed forms") {
  for (double k : {0.0, 0.3, -0.7, 0.95, 0.999, 1.001, -1.05, 2.0, -10.0}) {
    for (double eps : {0.0, 1.0, -2.5, kPi - 1e-6}) {
      const ExCenter e(k, eps);
      CAPTURE(k);
      CAPTURE(eps);
      const auto p = definite_via_antiderivative(IntegralKind::Poisson, -kPi, kPi, e);
      CHECK(p.method == Method::AntiderivativeLift);
      CHECK(p.value == Approx(poisson_closed(e).value).epsilon(1e-9));
      const auto i1 = definite_via_antiderivative(IntegralKind::I1, 0.0, kTwoPi, e);
      CHECK(i1.value == Approx(i1_closed(e).value).scale(1.0).epsilon(1e-9));
      const auto i2 = definite_via_antiderivative(IntegralKind::I2, 0.0, kTwoPi, e);
      CHECK(i2.value == Approx(0.0).scale(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("lifted antiderivatives over several periods") {
  const ExCenter e(0.8, 0.4);
  const auto p = definite_via_antiderivative(IntegralKind::Poisson, -3.0 * kPi, 3.0 * kPi, e);
  CHECK(p.value == Approx(3.0 * poisson_closed(e).value).epsilon(1e-10));
  const auto i1 = definite_via_antiderivative(IntegralKind::I1, 1.0, 1.0 + 2.0 * kTwoPi,
                                              ExCenter(-4.0, 0.4));
  CHECK(i1.value == Approx(0.0).scale(1.0).epsilon(1e-10));
}

TEST_CASE("lifted antiderivative on a sub-interval matches quadrature") {
  const ExCenter e(0.98, -0.6);
  for (auto kind : {IntegralKind::Poisson, IntegralKind::I1, IntegralKind::I2}) {
    const auto lifted = definite_via_antiderivative(kind, -1.1, 2.7, e);
    const auto q = oracle::integrate([&](double a) { return integrand(kind, a, e); }, -1.1, 2.7,
                                     1e-11);
    CHECK(q.converged);
    CHECK(lifted.value == Approx(q.value).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("lift on the circle: I1 across the pole picks up pi") {
  const ExCenter e(1.0, 0.0);
  // integrand is 1/2 away from the pole; the pi comes from the theta jump
  const auto r = definite_via_antiderivative(IntegralKind::I1, -kPi, kPi, e);
  CHECK(r.value == Approx(kPi));
  const auto s = definite_via_antiderivative(IntegralKind::I1, 0.5, 2.5, e);
  CHECK(s.value == Approx(1.0));
}

TEST_CASE("definite_via_antiderivative argument checks") {
  const ExCenter e(0.5, 0.0);
  CHECK_THROWS_AS(definite_via_antiderivative(IntegralKind::I1, 1.0, 0.0, e), InvalidArgument);
  CHECK_THROWS_AS(definite_via_antiderivative(IntegralKind::Poisson, 0.0, 1.0, ExCenter(-1.0, 0.0)),
                  InvalidArgument);
  CHECK(definite_via_antiderivative(IntegralKind::I2, 0.4, 0.4, e).value == 0.0);
}

TEST_CASE("principal-value oracle on the circle") {
  for (double k : {1.0, -1.0}) {
    for (double eps : {0.0, 0.7, -2.0}) {
      const ExCenter e(k, eps);
      const auto i1 = verify::full_period_oracle(IntegralKind::I1, e, 1e-9);
      CHECK(i1.converged);
      CHECK(i1.value == Approx(kPi).epsilon(1e-7));
      const auto i2 = verify::full_period_oracle(IntegralKind::I2, e, 1e-9);
      CHECK(i2.converged);
      CHECK(std::fabs(i2.value) < 1e-6);
      // double pole: no principal value
      CHECK_FALSE(verify::full_period_oracle(IntegralKind::Poisson, e, 1e-9).converged);
    }
  }
}

TEST_CASE("agreement rule") {
  oracle::QuadratureOutcome q{1.0 + 1e-9, 0.0, 15, true};
  CHECK(verify::agrees(1.0, q, 1e-8));
  q.converged = false;
  CHECK_FALSE(verify::agrees(1.0, q, 1e-8));
  CHECK(verify::row_tolerance(ExCenter(0.99, 0.0), 1e-8) == 1e-5);
  CHECK(verify::row_tolerance(ExCenter(0.9, 0.0), 1e-8) == 1e-8);
  CHECK(verify::row_tolerance(ExCenter(1.0, 0.0), 1e-8) == 1e-8);
}
