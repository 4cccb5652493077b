#pragma once

#include <utility>

#include "excentric/excenter.hpp"

// Ex-centric circular functions on the unit circle.
//
// A straight line d revolves around the ex-center E(k, eps) and meets the
// unit circle in W1 (on the positive half-line, Principal) and W2 (Secondary).
// theta is the direction of d seen from E; alpha is the polar angle of W seen
// from the origin. All functions are pure and thread-safe.

namespace excentric {

/// Existence interval of theta: the full circle for |k| <= 1, otherwise the
/// arc centered at pi + eps with half-width arcsin(1/|k|).
AngleInterval theta_domain(const ExCenter& e);

/// Signed distance from E to W_d along direction theta:
/// -k cos(theta - eps) +/- sqrt(1 - k^2 sin^2(theta - eps)).
/// Throws OutOfDomain when theta lies outside theta_domain(e).
double rex(double theta, const ExCenter& e, Determination d);

/// Both determinations at once, (Principal, Secondary).
std::pair<double, double> rex_pair(double theta, const ExCenter& e);

/// Radial ex-centric function of the centric variable,
/// +/- sqrt(1 + k^2 - 2k cos(alpha - eps)). Defined for every alpha and k.
double Rex(double alpha, const ExCenter& e, Determination d);

/// beta = theta - alpha as a function of alpha, from the two-argument
/// arctangent of (k sin(alpha - eps), 1 - k cos(alpha - eps)) with the sign
/// of Rex applied per determination. Result in (-pi, pi].
/// Throws Singularity when |Rex| <= 1e-12.
double beta_of_alpha(double alpha, const ExCenter& e, Determination d);

/// Polar angle of W_d: theta - arcsin(k sin(theta - eps)) for Principal,
/// theta + arcsin(k sin(theta - eps)) + pi for Secondary.
double alpha_of_theta(double theta, const ExCenter& e, Determination d);

/// alpha + beta(alpha); inverse of alpha_of_theta on the matching branch.
double theta_of_alpha(double alpha, const ExCenter& e, Determination d);

/// d(beta)/d(alpha) = k (cos(alpha - eps) - k) / Rex^2.
double dbeta_dalpha(double alpha, const ExCenter& e, Determination d);

/// d(alpha)/d(theta) = 1 - k cos(theta - eps) / (+/- sqrt(1 - k^2 sin^2)).
/// Throws Singularity at the domain endpoints where the root vanishes.
double dex(double theta, const ExCenter& e, Determination d);

/// d(theta)/d(alpha) = (1 - k cos(alpha - eps)) / Rex^2; the same on both
/// determinations.
double Dex(double alpha, const ExCenter& e, Determination d);

/// Poisson nucleus (1 - k^2) / Rex^2.
double nip(double alpha, const ExCenter& e);

/// (cos alpha, sin alpha).
UnitVector2 rad(double alpha);

}  // namespace excentric
