#include "excentric/integral.hpp"

#include <cfloat>
#include <cmath>

#include "excentric/angle.hpp"
#include "excentric/errors.hpp"
#include "excentric/functions.hpp"

namespace excentric {

namespace {

constexpr double kMaxStep = kPi / 8.0;
constexpr double kMaxBetaIncrement = kPi / 4.0;
constexpr int kMaxBisections = 60;

IntegralResult closed(double value, const ExCenter& e) {
  return {value, e.on_circle() ? Method::PrincipalValue : Method::ClosedForm, 0.0, 0};
}

// Principal beta with its arctangent branch followed continuously. Off the
// circle beta is continuous and only its 2pi branch cuts are removed; on the
// circle beta jumps by pi at the pole while theta(alpha) = alpha/2 + const,
// so the quantum there is pi.
class BetaLift {
 public:
  explicit BetaLift(const ExCenter& e) : e_(e), quantum_(e.on_circle() ? kPi : kTwoPi) {}

  double raw(double alpha) {
    ++evaluations_;
    try {
      return beta_of_alpha(alpha, e_, Determination::Principal);
    } catch (const Singularity&) {
      if (!e_.on_circle()) {
        throw;
      }
      return 0.5 * kPi;
    }
  }

  /// Lifted beta at x1 given the lifted value at x0.
  double advance(double x0, double x1, double lifted0, int depth = 0) {
    const double candidate = unwrap_to(raw(x1), lifted0, quantum_);
    if (std::fabs(candidate - lifted0) > kMaxBetaIncrement && depth < kMaxBisections) {
      const double mid = 0.5 * (x0 + x1);
      const double lifted_mid = advance(x0, mid, lifted0, depth + 1);
      return advance(mid, x1, lifted_mid, depth + 1);
    }
    return candidate;
  }

  /// beta(b) - beta(a) along the lifted branch.
  double increment(double a, double b) {
    const double start = raw(a);
    const auto steps = static_cast<int>(std::ceil((b - a) / kMaxStep));
    double lifted = start;
    double x0 = a;
    for (int i = 1; i <= steps; ++i) {
      const double x1 = i == steps ? b : a + (b - a) * double(i) / double(steps);
      lifted = advance(x0, x1, lifted);
      x0 = x1;
    }
    return lifted - start;
  }

  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }

 private:
  const ExCenter& e_;
  double quantum_;
  std::size_t evaluations_ = 0;
};

}  // namespace

std::string_view to_string(IntegralKind kind) {
  switch (kind) {
    case IntegralKind::Poisson:
      return "poisson";
    case IntegralKind::I1:
      return "i1";
    case IntegralKind::I2:
      return "i2";
  }
  return "?";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::ClosedForm:
      return "closed-form";
    case Method::PrincipalValue:
      return "principal-value";
    case Method::AntiderivativeLift:
      return "antiderivative-lift";
    case Method::Quadrature:
      return "quadrature";
  }
  return "?";
}

IntegralResult poisson_closed(const ExCenter& e) {
  if (e.on_circle()) {
    return closed(0.0, e);
  }
  const double k = e.k();
  return closed(kTwoPi / std::fabs((1.0 - k) * (1.0 + k)), e);
}

IntegralResult i1_closed(const ExCenter& e) {
  switch (e.position()) {
    case Position::Interior:
      return closed(kTwoPi, e);
    case Position::OnCircle:
      return closed(kPi, e);
    case Position::Exterior:
      return closed(0.0, e);
  }
  return closed(0.0, e);
}

IntegralResult i2_closed(const ExCenter& e) { return closed(0.0, e); }

double poisson_antiderivative(double alpha, const ExCenter& e) {
  if (e.on_circle()) {
    throw Singularity("poisson_antiderivative: undefined for |k| = 1");
  }
  const double k = e.k();
  const double beta = beta_of_alpha(alpha, e, Determination::Principal);
  return (alpha + 2.0 * beta) / ((1.0 - k) * (1.0 + k));
}

double i1_antiderivative(double alpha, const ExCenter& e) {
  try {
    return theta_of_alpha(alpha, e, Determination::Principal);
  } catch (const Singularity&) {
    if (!e.on_circle()) {
      throw;
    }
    return alpha + 0.5 * kPi;
  }
}

double i2_antiderivative(double alpha, const ExCenter& e) {
  const double r = Rex(alpha, e, Determination::Principal);
  if (r <= kSingularTol) {
    throw Singularity("i2_antiderivative: ln|Rex| diverges at the pole");
  }
  return std::log(r);
}

double integrand(IntegralKind kind, double alpha, const ExCenter& e) {
  const double k = e.k();
  const double c = std::cos(alpha - e.eps());
  const double denom = 1.0 + k * k - 2.0 * k * c;
  switch (kind) {
    case IntegralKind::Poisson:
      return 1.0 / denom;
    case IntegralKind::I1:
      return (1.0 - k * c) / denom;
    case IntegralKind::I2:
      return k * std::sin(alpha - e.eps()) / denom;
  }
  return 0.0;
}

IntegralResult definite_via_antiderivative(IntegralKind kind, double a, double b,
                                           const ExCenter& e) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw InvalidArgument("definite_via_antiderivative: need finite a <= b");
  }
  if (kind == IntegralKind::Poisson && e.on_circle()) {
    throw InvalidArgument("definite_via_antiderivative: Poisson integral diverges for |k| = 1");
  }
  IntegralResult out{0.0, Method::AntiderivativeLift, 0.0, 0};
  if (a == b) {
    return out;
  }

  const double k = e.k();
  double scale = 1.0;
  switch (kind) {
    case IntegralKind::Poisson: {
      BetaLift lift(e);
      const double denom = (1.0 - k) * (1.0 + k);
      out.value = ((b - a) + 2.0 * lift.increment(a, b)) / denom;
      out.evaluations = lift.evaluations();
      scale = (std::fabs(b - a) + kTwoPi) / std::fabs(denom);
      break;
    }
    case IntegralKind::I1: {
      BetaLift lift(e);
      out.value = (b - a) + lift.increment(a, b);
      out.evaluations = lift.evaluations();
      scale = std::fabs(b - a) + kTwoPi;
      break;
    }
    case IntegralKind::I2: {
      // Single-valued; the walk only guards the sample points.
      const auto steps = static_cast<int>(std::ceil((b - a) / kMaxStep));
      const double start = i2_antiderivative(a, e);
      double end = start;
      for (int i = 1; i <= steps; ++i) {
        end = i2_antiderivative(i == steps ? b : a + (b - a) * double(i) / double(steps), e);
      }
      out.value = end - start;
      out.evaluations = static_cast<std::size_t>(steps) + 1;
      scale = std::fabs(start) + std::fabs(end) + 1.0;
      break;
    }
  }
  out.err_estimate = 4.0 * DBL_EPSILON * double(out.evaluations) * scale;
  return out;
}

}  // namespace excentric
