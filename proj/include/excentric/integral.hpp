#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "excentric/excenter.hpp"

// Closed forms and antiderivatives for the Poisson integral
//   PI(k, eps) = int_{-pi}^{pi} d(alpha) / (1 + k^2 - 2k cos(alpha - eps))
// and the auxiliary full-period integrals (unit radius, r = k)
//   I1 = int_0^{2pi} (1 - k cos(alpha - eps)) / Rex^2 d(alpha)
//   I2 = int_0^{2pi} k sin(alpha - eps) / Rex^2 d(alpha).

namespace excentric {

enum class IntegralKind : std::uint8_t { Poisson, I1, I2 };

enum class Method : std::uint8_t { ClosedForm, PrincipalValue, AntiderivativeLift, Quadrature };

std::string_view to_string(IntegralKind kind);
std::string_view to_string(Method method);

struct IntegralResult {
  double value = 0.0;
  Method method = Method::ClosedForm;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// 2pi / |1 - k^2|; 0 tagged PrincipalValue when E lies on the circle.
IntegralResult poisson_closed(const ExCenter& e);

/// 2pi inside the circle, pi on it (principal value), 0 outside.
IntegralResult i1_closed(const ExCenter& e);

/// Always 0; tagged PrincipalValue on the circle, where the integrand has a
/// simple pole.
IntegralResult i2_closed(const ExCenter& e);

/// (alpha + 2 beta(alpha)) / (1 - k^2) on the Principal branch. The signed
/// denominator makes its derivative 1/Rex^2 on both sides of the circle.
/// Throws Singularity for |k| = 1.
double poisson_antiderivative(double alpha, const ExCenter& e);

/// theta(alpha) on the Principal branch. For |k| = 1 at the pole itself the
/// right-hand limit alpha + pi/2 is returned.
double i1_antiderivative(double alpha, const ExCenter& e);

/// ln |Rex(alpha)|. Throws Singularity at the pole.
double i2_antiderivative(double alpha, const ExCenter& e);

/// The integrand of the given kind written directly from its definition.
double integrand(IntegralKind kind, double alpha, const ExCenter& e);

/// Definite integral over [a, b] from the matching antiderivative, with the
/// arctangent branch of beta lifted for continuity. [a, b] is walked in steps
/// of at most pi/8; a step is bisected while its unwrapped beta increment
/// exceeds pi/4. Throws InvalidArgument for a > b or Poisson with |k| = 1,
/// Singularity when a sample point falls on a pole (except for I1 on the
/// circle, whose antiderivative has a finite jump there).
IntegralResult definite_via_antiderivative(IntegralKind kind, double a, double b,
                                           const ExCenter& e);

}  // namespace excentric
