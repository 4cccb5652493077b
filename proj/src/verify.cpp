#include "excentric/verify.hpp"

#include <array>
#include <cmath>

#include "excentric/angle.hpp"

namespace excentric::verify {

oracle::QuadratureOutcome full_period_oracle(IntegralKind kind, const ExCenter& e, double tol) {
  const auto f = [kind, e](double alpha) { return integrand(kind, alpha, e); };
  if (e.on_circle()) {
    // Rex vanishes at alpha = eps for k = 1 and at eps + pi for k = -1.
    const double pole = e.k() > 0.0 ? e.eps() : e.eps() + kPi;
    const std::array<double, 1> poles{pole};
    return oracle::integrate_pv(f, pole - kPi, pole + kPi, poles, tol);
  }
  if (kind == IntegralKind::Poisson) {
    return oracle::integrate(f, -kPi, kPi, tol);
  }
  return oracle::integrate(f, 0.0, kTwoPi, tol);
}

IntegralResult closed_form(IntegralKind kind, const ExCenter& e) {
  switch (kind) {
    case IntegralKind::Poisson:
      return poisson_closed(e);
    case IntegralKind::I1:
      return i1_closed(e);
    case IntegralKind::I2:
      return i2_closed(e);
  }
  return i2_closed(e);
}

double row_tolerance(const ExCenter& e, double tol) {
  const double gap = std::fabs(std::fabs(e.k()) - 1.0);
  if (!e.on_circle() && gap < 0.05) {
    return std::fmax(tol, 1e-5);
  }
  return tol;
}

bool agrees(double closed, const oracle::QuadratureOutcome& q, double tolerance) {
  return q.converged && std::fabs(closed - q.value) <= tolerance * (1.0 + std::fabs(closed));
}

}  // namespace excentric::verify
