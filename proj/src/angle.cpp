#include "excentric/angle.hpp"

#include <cmath>

#include "excentric/errors.hpp"

namespace excentric {

double normalize_angle(double x) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("normalize_angle: non-finite angle");
  }
  if (x >= -kPi && x < kPi) {
    return x;
  }
  double r = x - kTwoPi * std::floor((x + kPi) / kTwoPi);
  // floor can land one period off when x + pi sits on a multiple of 2pi
  if (r >= kPi) {
    r -= kTwoPi;
  } else if (r < -kPi) {
    r += kTwoPi;
  }
  return r;
}

double unwrap_to(double value, double reference, double period) {
  return value - period * std::round((value - reference) / period);
}

}  // namespace excentric
