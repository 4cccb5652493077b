#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "excentric/excenter.hpp"

// Randomized invariant sweeps. Each invariant is measured against an
// independent route (algebraic identity, geometric solve, finite difference,
// quadrature) and reported as the worst error seen over its samples.

namespace excentric::check {

struct InvariantResult {
  std::string name;
  std::size_t samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct CheckReport {
  std::vector<InvariantResult> invariants;

  [[nodiscard]] bool pass() const;
  void append(const CheckReport& other);
};

/// Deterministic uniform sampler; identical streams on every platform for a
/// given seed (std::uniform_real_distribution is not portable).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Ex-center with k uniform in [k_lo, k_hi) and eps uniform in [-pi, pi).
  ExCenter excenter(double k_lo = -3.0, double k_hi = 3.0);
  /// theta uniform over theta_domain(e).
  double theta_in_domain(const ExCenter& e);

 private:
  std::mt19937_64 engine_;
};

/// rex sum/difference/product, two-variable consistency, round trip,
/// Dex/dex reciprocity, nucleus two forms, k = +-1 degenerations,
/// double-speed, rad identities, angle normalization.
CheckReport identity_suite(std::uint64_t seed, std::size_t samples);

/// Central differences (h = 1e-5) against Dex, d(beta)/d(alpha), dex and
/// the three antiderivative integrands, on non-singular points.
CheckReport derivative_suite(std::uint64_t seed, std::size_t samples);

/// rex against the Cartesian line-circle solve, exterior same-sign
/// behaviour, and NoIntersection off the existence arcs.
CheckReport geometric_suite(std::uint64_t seed, std::size_t samples);

/// Closed forms against quadrature and the continuity-lifted antiderivatives
/// against closed forms (full periods) and quadrature (sub-intervals), on
/// random ex-centers with ||k| - 1| >= 0.05.
CheckReport integral_suite(std::uint64_t seed, std::size_t samples);

/// Everything above; what the `check` command runs.
CheckReport run_all(std::uint64_t seed, std::size_t samples);

}  // namespace excentric::check
