#pragma once

#include "excentric/excenter.hpp"
#include "excentric/integral.hpp"
#include "excentric/quadrature.hpp"

// Glue between the closed forms and the quadrature oracle: which window and
// which oracle to use for a full-period integral, and when a comparison passes.

namespace excentric::verify {

/// Quadrature of the full-period integral of the given kind: ordinary
/// adaptive quadrature over [-pi, pi] (Poisson) or [0, 2pi] (I1, I2) off the
/// circle; on the circle, the principal-value oracle over the period centered
/// on the pole. `tol` is the absolute tolerance requested from the oracle.
oracle::QuadratureOutcome full_period_oracle(IntegralKind kind, const ExCenter& e, double tol);

/// Closed form of the given kind.
IntegralResult closed_form(IntegralKind kind, const ExCenter& e);

/// Comparison tolerance for one ex-center: `tol`, raised to 1e-5 when
/// 0 < ||k| - 1| < 0.05 where the integrand peak sharpens as 1/(1 - |k|)^2.
double row_tolerance(const ExCenter& e, double tol);

/// |closed - oracle| <= tolerance * (1 + |closed|) with a converged oracle.
bool agrees(double closed, const oracle::QuadratureOutcome& q, double tolerance);

}  // namespace excentric::verify
