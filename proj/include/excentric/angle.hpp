#pragma once

#include <numbers>

namespace excentric {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Equivalent angle in [-pi, pi). Throws InvalidArgument on non-finite input.
double normalize_angle(double x);

/// The member of {value + n*period} nearest to reference.
double unwrap_to(double value, double reference, double period = kTwoPi);

}  // namespace excentric
