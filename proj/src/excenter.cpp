#include "excentric/excenter.hpp"

#include <cmath>

#include "excentric/angle.hpp"
#include "excentric/errors.hpp"

namespace excentric {

ExCenter::ExCenter(double k, double eps) : k_(k), eps_(0.0) {
  if (!std::isfinite(k) || !std::isfinite(eps)) {
    throw InvalidArgument("ExCenter: k and eps must be finite");
  }
  eps_ = normalize_angle(eps);
}

Position ExCenter::position() const noexcept {
  const double a = std::fabs(k_);
  if (std::fabs(a - 1.0) <= kSingularTol) {
    return Position::OnCircle;
  }
  return a < 1.0 ? Position::Interior : Position::Exterior;
}

bool AngleInterval::full_circle() const noexcept { return width() >= kTwoPi; }

bool AngleInterval::contains(double theta, double tol) const {
  if (full_circle()) {
    return true;
  }
  const double mid = 0.5 * (lo + hi);
  return std::fabs(normalize_angle(theta - mid)) <= 0.5 * width() + tol;
}

}  // namespace excentric
