#pragma once

#include <cstdint>

namespace excentric {

/// Tolerance used for on-circle classification, tangency and pole detection.
inline constexpr double kSingularTol = 1e-12;

enum class Position : std::uint8_t { Interior, OnCircle, Exterior };

/// Branch selector for the two-valued functions (indices 1 and 2).
enum class Determination : std::uint8_t { Principal = 1, Secondary = 2 };

/// +1 for Principal, -1 for Secondary.
constexpr double sign_of(Determination d) noexcept {
  return d == Determination::Principal ? 1.0 : -1.0;
}

/// The ex-center E(k, eps) on the unit circle's plane: numeric ex-centricity
/// k (dimensionless, signed) and angular position eps, kept in [-pi, pi).
class ExCenter {
 public:
  ExCenter(double k, double eps);

  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double eps() const noexcept { return eps_; }

  [[nodiscard]] Position position() const noexcept;
  [[nodiscard]] bool interior() const noexcept { return position() == Position::Interior; }
  [[nodiscard]] bool on_circle() const noexcept { return position() == Position::OnCircle; }
  [[nodiscard]] bool exterior() const noexcept { return position() == Position::Exterior; }

 private:
  double k_;
  double eps_;
};

/// Existence interval of the ex-centric variable, [lo, hi] modulo 2pi.
struct AngleInterval {
  double lo;
  double hi;

  [[nodiscard]] double width() const noexcept { return hi - lo; }
  [[nodiscard]] bool full_circle() const noexcept;
  /// True if theta (any representative mod 2pi) lies in [lo - tol, hi + tol].
  [[nodiscard]] bool contains(double theta, double tol = 0.0) const;
};

/// Unit vector in the plane, read as a unit complex number.
struct UnitVector2 {
  double x;
  double y;
};

/// Complex conjugate: the mirror image across the real axis.
constexpr UnitVector2 conjugate(UnitVector2 u) noexcept { return {u.x, -u.y}; }

/// Complex product of two unit vectors (angles add).
constexpr UnitVector2 operator*(UnitVector2 a, UnitVector2 b) noexcept {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

}  // namespace excentric
