#include "excentric/functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "excentric/angle.hpp"
#include "excentric/errors.hpp"

namespace excentric {

namespace {

// 1 + k^2 - 2k cos(phi), written as a sum of non-negative terms so it keeps
// full relative precision near the pole.
double rex_squared(double phi, double k) {
  if (k >= 0.0) {
    const double s = std::sin(0.5 * phi);
    return (1.0 - k) * (1.0 - k) + 4.0 * k * s * s;
  }
  const double c = std::cos(0.5 * phi);
  return (1.0 + k) * (1.0 + k) - 4.0 * k * c * c;
}

// 1 - k cos(phi), same treatment.
double one_minus_kcos(double phi, double k) {
  if (k >= 0.0) {
    const double s = std::sin(0.5 * phi);
    return (1.0 - k) + 2.0 * k * s * s;
  }
  const double c = std::cos(0.5 * phi);
  return (1.0 + k) - 2.0 * k * c * c;
}

double rex_squared_checked(double alpha, const ExCenter& e, const char* who) {
  const double r2 = rex_squared(normalize_angle(alpha - e.eps()), e.k());
  if (r2 <= kSingularTol * kSingularTol) {
    throw Singularity(std::string(who) + ": Rex vanishes (pole of the ex-center on the circle)");
  }
  return r2;
}

// Reduced ex-centric angle psi = theta - eps and the discriminant
// 1 - k^2 sin^2(psi), with the domain checked.
struct Reduced {
  double psi;
  double disc;
};

Reduced reduce_theta(double theta, const ExCenter& e, const char* who) {
  const double psi = normalize_angle(theta - e.eps());
  const double ks = e.k() * std::sin(psi);
  double disc = (1.0 - ks) * (1.0 + ks);
  if (e.exterior()) {
    // Only the arc facing pi + eps belongs to the domain; the antipodal arc
    // has a non-negative discriminant too but is excluded.
    if (std::cos(psi) > 0.0 || disc < -kSingularTol) {
      throw OutOfDomain(std::string(who) + ": theta outside the existence interval");
    }
  }
  if (disc < 0.0) {
    disc = 0.0;
  }
  return {psi, disc};
}

// arcsin(k sin psi), continued as sign(k) * psi when E sits on the circle.
double branch_angle(const Reduced& r, const ExCenter& e) {
  if (e.on_circle()) {
    return std::copysign(1.0, e.k()) * r.psi;
  }
  return std::asin(std::clamp(e.k() * std::sin(r.psi), -1.0, 1.0));
}

}  // namespace

AngleInterval theta_domain(const ExCenter& e) {
  if (!e.exterior()) {
    return {-kPi, kPi};
  }
  const double center = kPi + e.eps();
  const double half = std::asin(1.0 / std::fabs(e.k()));
  return {center - half, center + half};
}

std::pair<double, double> rex_pair(double theta, const ExCenter& e) {
  const Reduced r = reduce_theta(theta, e, "rex");
  const double k = e.k();
  const double c = std::cos(r.psi);
  if (e.on_circle()) {
    // Root continued as cos(psi): rex1 = (1 - k) c, rex2 = -(1 + k) c.
    return {(1.0 - k) * c, -(1.0 + k) * c};
  }
  // Roots of t^2 + 2 b t + (k^2 - 1) = 0; take the one without cancellation
  // and recover the other from the product.
  const double b = k * c;
  const double root = std::sqrt(r.disc);
  const double product = (k - 1.0) * (k + 1.0);
  if (b >= 0.0) {
    const double second = -b - root;
    return {second == 0.0 ? 0.0 : product / second, second};
  }
  const double first = -b + root;
  return {first, product / first};
}

double rex(double theta, const ExCenter& e, Determination d) {
  const auto [first, second] = rex_pair(theta, e);
  return d == Determination::Principal ? first : second;
}

double Rex(double alpha, const ExCenter& e, Determination d) {
  return sign_of(d) * std::sqrt(rex_squared(normalize_angle(alpha - e.eps()), e.k()));
}

double beta_of_alpha(double alpha, const ExCenter& e, Determination d) {
  rex_squared_checked(alpha, e, "beta_of_alpha");
  const double phi = normalize_angle(alpha - e.eps());
  const double s = sign_of(d);
  return std::atan2(s * e.k() * std::sin(phi), s * one_minus_kcos(phi, e.k()));
}

double alpha_of_theta(double theta, const ExCenter& e, Determination d) {
  const Reduced r = reduce_theta(theta, e, "alpha_of_theta");
  const double b = branch_angle(r, e);
  return d == Determination::Principal ? theta - b : theta + b + kPi;
}

double theta_of_alpha(double alpha, const ExCenter& e, Determination d) {
  return alpha + beta_of_alpha(alpha, e, d);
}

double dbeta_dalpha(double alpha, const ExCenter& e, Determination /*d*/) {
  const double r2 = rex_squared_checked(alpha, e, "dbeta_dalpha");
  const double k = e.k();
  return k * (std::cos(alpha - e.eps()) - k) / r2;
}

double dex(double theta, const ExCenter& e, Determination d) {
  const Reduced r = reduce_theta(theta, e, "dex");
  const double s = sign_of(d);
  if (e.on_circle()) {
    return 1.0 - s * std::copysign(1.0, e.k());
  }
  if (r.disc <= kSingularTol) {
    throw Singularity("dex: unbounded at the tangency points of the existence interval");
  }
  return 1.0 - e.k() * std::cos(r.psi) / (s * std::sqrt(r.disc));
}

double Dex(double alpha, const ExCenter& e, Determination /*d*/) {
  const double r2 = rex_squared_checked(alpha, e, "Dex");
  return one_minus_kcos(normalize_angle(alpha - e.eps()), e.k()) / r2;
}

double nip(double alpha, const ExCenter& e) {
  const double r2 = rex_squared_checked(alpha, e, "nip");
  const double k = e.k();
  return (1.0 - k) * (1.0 + k) / r2;
}

UnitVector2 rad(double alpha) {
  if (!std::isfinite(alpha)) {
    throw InvalidArgument("rad: non-finite angle");
  }
  return {std::cos(alpha), std::sin(alpha)};
}

}  // namespace excentric
