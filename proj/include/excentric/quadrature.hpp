#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "excentric/excenter.hpp"

// Independent numeric verifiers. Nothing here calls the ex-centric function
// implementations; the closed forms are checked against these.

namespace excentric::oracle {

using Integrand = std::function<double(double)>;

struct QuadratureOutcome {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureLimits {
  /// Upper bound on the number of live subintervals.
  std::size_t max_intervals = std::size_t{1} << 16;
};

/// Globally adaptive Gauss-Kronrod 7/15 quadrature. The interval with the
/// largest local error |K15 - G7| is bisected until the summed estimate is
/// at most tol (absolute) or the interval budget runs out, in which case
/// converged is false. a > b integrates the reversed interval and negates.
/// Throws InvalidArgument on a non-positive tol or a non-finite sample.
QuadratureOutcome integrate(const Integrand& f, double a, double b, double tol,
                            QuadratureLimits limits = {});

struct PvOptions {
  /// Initial excision half-width; <= 0 selects min(b - a, 1) / 8, further
  /// capped at half the distance to the nearest other pole or endpoint.
  double delta0 = 0.0;
  /// Number of halvings of the excision radius before giving up.
  int max_levels = 30;
};

/// Cauchy principal value over [a, b] with singularities at the given poles
/// (each strictly inside). Each pole is excised symmetrically with radii
/// delta0 * 2^-n and the excised integrals are Richardson-extrapolated in
/// odd powers of the radius. Converged once two successive extrapolants
/// differ by at most tol. A non-integrable (double) pole never settles and
/// comes back with converged = false.
QuadratureOutcome integrate_pv(const Integrand& f, double a, double b,
                               std::span<const double> poles, double tol,
                               PvOptions options = {});

/// Signed parameters t of the two points where the line through
/// (k cos eps, k sin eps) with direction (cos theta, sin theta) meets the
/// unit circle, larger root first (Principal, Secondary). Solved in
/// Cartesian coordinates. nullopt when the line misses the circle.
std::optional<std::pair<double, double>> line_circle_intersection(double theta,
                                                                  const ExCenter& e);

/// Central difference (f(x + h) - f(x - h)) / 2h.
double finite_difference(const Integrand& f, double x, double h);

}  // namespace excentric::oracle
