#include "excentric/check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "excentric/angle.hpp"
#include "excentric/errors.hpp"
#include "excentric/functions.hpp"
#include "excentric/integral.hpp"
#include "excentric/quadrature.hpp"

namespace excentric::check {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFdStep = 1e-5;
constexpr Determination kBoth[] = {Determination::Principal, Determination::Secondary};

class Tracker {
 public:
  Tracker(std::string name, double tolerance) : result_{std::move(name), 0, 0.0, tolerance, true} {}

  void record(double error) {
    ++result_.samples;
    if (!std::isfinite(error)) {
      error = kInf;
    }
    result_.max_error = std::max(result_.max_error, error);
  }

  InvariantResult finish() {
    result_.pass = result_.max_error <= result_.tolerance;
    return result_;
  }

 private:
  InvariantResult result_;
};

double rel_error(double value, double expected) {
  return std::fabs(value - expected) / (1.0 + std::fabs(expected));
}

double angle_error(double a, double b) { return std::fabs(normalize_angle(a - b)); }

// The (theta, determination) pair that names the point W(alpha) inside
// theta_domain. theta_of_alpha may return the antipodal direction of the same
// line, or the other root at that direction, when E is exterior.
std::optional<std::pair<double, Determination>> locate(double alpha, double theta,
                                                       const ExCenter& e) {
  const AngleInterval domain = theta_domain(e);
  for (double candidate : {theta, theta + kPi}) {
    if (!domain.contains(candidate, 1e-12)) {
      continue;
    }
    for (Determination d : kBoth) {
      try {
        if (angle_error(alpha_of_theta(candidate, e, d), alpha) < 1e-8) {
          return std::pair{candidate, d};
        }
      } catch (const OutOfDomain&) {
      }
    }
  }
  return std::nullopt;
}

double discriminant(double theta, const ExCenter& e) {
  const double ks = e.k() * std::sin(theta - e.eps());
  return (1.0 - ks) * (1.0 + ks);
}

double rex_abs(double alpha, const ExCenter& e) {
  return std::fabs(Rex(alpha, e, Determination::Principal));
}

ExCenter away_from_circle(Sampler& rng, double margin) {
  for (;;) {
    ExCenter e = rng.excenter();
    if (std::fabs(std::fabs(e.k()) - 1.0) >= margin) {
      return e;
    }
  }
}

}  // namespace

bool CheckReport::pass() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.pass; });
}

void CheckReport::append(const CheckReport& other) {
  invariants.insert(invariants.end(), other.invariants.begin(), other.invariants.end());
}

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ExCenter Sampler::excenter(double k_lo, double k_hi) {
  const double k = uniform(k_lo, k_hi);
  const double eps = uniform(-kPi, kPi);
  return ExCenter(k, eps);
}

double Sampler::theta_in_domain(const ExCenter& e) {
  const AngleInterval domain = theta_domain(e);
  return uniform(domain.lo, domain.hi);
}

CheckReport identity_suite(std::uint64_t seed, std::size_t samples) {
  Sampler rng(seed);
  Tracker sum("rex_sum", 1e-12);
  Tracker difference("rex_difference", 1e-12);
  Tracker product("rex_product", 1e-10);
  Tracker consistency("variable_form_consistency", 1e-10);
  Tracker round_trip("round_trip", 1e-10);
  Tracker reciprocity("dex_Dex_reciprocity", 1e-9);
  Tracker nucleus("nip_two_forms", 1e-12);
  Tracker plus_one("degeneration_k_plus_1", 1e-12);
  Tracker minus_one("degeneration_k_minus_1", 1e-12);
  Tracker speed("double_speed", 1e-10);
  Tracker rad_ids("rad_identities", 1e-12);
  Tracker normalize("normalize_angle", 1e-12);

  for (std::size_t i = 0; i < samples; ++i) {
    {
      const ExCenter e = rng.excenter();
      const double k = e.k();
      const double theta = rng.theta_in_domain(e);
      const double psi = theta - e.eps();
      const auto [r1, r2] = rex_pair(theta, e);

      sum.record(std::fabs(r1 + r2 + 2.0 * k * std::cos(psi)));
      difference.record(std::fabs(r1 - r2 - 2.0 * std::sqrt(std::max(0.0, discriminant(theta, e)))));
      double perr = std::fabs(r1 * r2 - (k * k - 1.0));
      if (e.exterior() && !(r1 * r2 > 0.0)) {
        perr = kInf;
      }
      product.record(perr);

      double cerr = 0.0;
      for (Determination d : kBoth) {
        const double big = Rex(alpha_of_theta(theta, e, d), e, d);
        const double small = d == Determination::Principal ? r1 : r2;
        cerr = std::max(cerr, e.exterior() ? std::fabs(std::fabs(big) - std::fabs(small))
                                           : std::fabs(big - small));
      }
      consistency.record(cerr);

      if (std::fabs(r1) > 1e-3) {
        const double lhs = nip(alpha_of_theta(theta, e, Determination::Principal), e);
        const double rhs = -r2 / r1;
        nucleus.record(std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
      }
    }
    {
      const ExCenter e = rng.excenter(-1.0, 1.0);
      const double theta = rng.uniform(-kPi, kPi);
      double err = 0.0;
      for (Determination d : kBoth) {
        err = std::max(err, angle_error(theta_of_alpha(alpha_of_theta(theta, e, d), e, d), theta));
      }
      round_trip.record(err);
    }
    {
      const ExCenter e = rng.excenter();
      const double alpha = rng.uniform(-kPi, kPi);
      if (rex_abs(alpha, e) > 1e-3) {
        for (Determination d : kBoth) {
          const auto located = locate(alpha, theta_of_alpha(alpha, e, d), e);
          if (!located) {
            reciprocity.record(kInf);
            continue;
          }
          if (discriminant(located->first, e) < 1e-3) {
            continue;
          }
          reciprocity.record(
              std::fabs(Dex(alpha, e, d) * dex(located->first, e, located->second) - 1.0));
        }
      }
    }
    {
      const double eps = rng.uniform(-kPi, kPi);
      const double theta = rng.uniform(-kPi, kPi);
      const double c = std::cos(theta - eps);
      const auto [p1, p2] = rex_pair(theta, ExCenter(1.0, eps));
      plus_one.record(std::max(std::fabs(p1), std::fabs(p2 + 2.0 * c)));
      const auto [m1, m2] = rex_pair(theta, ExCenter(-1.0, eps));
      minus_one.record(std::max(std::fabs(m1 - 2.0 * c), std::fabs(m2)));
    }
    {
      const double theta = rng.uniform(0.0, kPi);
      const double a_minus = alpha_of_theta(theta, ExCenter(-1.0, 0.0), Determination::Principal);
      const double a_plus = alpha_of_theta(theta, ExCenter(1.0, 0.0), Determination::Secondary);
      speed.record(std::max(angle_error(a_minus, 2.0 * theta),
                            angle_error(a_plus, 2.0 * theta + kPi)));
    }
    {
      const double x = rng.uniform(-10.0, 10.0);
      const UnitVector2 u = rad(x);
      const UnitVector2 v = rad(-x);
      const UnitVector2 p = u * v;
      const UnitVector2 c = conjugate(u);
      rad_ids.record(std::max({std::fabs(u.x * u.x + u.y * u.y - 1.0),
                               std::fabs(u.x + v.x - 2.0 * std::cos(x)), std::fabs(p.x - 1.0),
                               std::fabs(p.y), std::fabs(c.x - v.x) + std::fabs(c.y - v.y)}));
    }
    {
      const double x = rng.uniform(-100.0, 100.0);
      const double r = normalize_angle(x);
      const double turns = (r - x) / kTwoPi;
      double err = std::fabs(turns - std::round(turns)) * kTwoPi;
      if (!(r >= -kPi && r < kPi)) {
        err = kInf;
      }
      normalize.record(err);
    }
  }

  CheckReport report;
  for (Tracker* t : {&sum, &difference, &product, &consistency, &round_trip, &reciprocity,
                     &nucleus, &plus_one, &minus_one, &speed, &rad_ids, &normalize}) {
    report.invariants.push_back(t->finish());
  }
  return report;
}

CheckReport derivative_suite(std::uint64_t seed, std::size_t samples) {
  Sampler rng(seed);
  Tracker fd_Dex("fd_Dex", 1e-6);
  Tracker fd_beta("fd_dbeta_dalpha", 1e-6);
  Tracker fd_dex("fd_dex", 1e-6);
  Tracker fd_poisson("fd_poisson_antiderivative", 1e-6);
  Tracker fd_i1("fd_i1_antiderivative", 1e-6);
  Tracker fd_i2("fd_i2_antiderivative", 1e-6);

  using oracle::finite_difference;

  for (std::size_t i = 0; i < samples; ++i) {
    // Centric-variable functions at points with |Rex| >= 0.1.
    ExCenter e = rng.excenter();
    double alpha = rng.uniform(-kPi, kPi);
    while (rex_abs(alpha, e) < 0.1 || e.on_circle()) {
      e = rng.excenter();
      alpha = rng.uniform(-kPi, kPi);
    }
    for (Determination d : kBoth) {
      const double theta0 = theta_of_alpha(alpha, e, d);
      const double fd_theta = finite_difference(
          [&](double t) { return unwrap_to(theta_of_alpha(t, e, d), theta0); }, alpha, kFdStep);
      const double want = Dex(alpha, e, d);
      fd_Dex.record(std::fabs(fd_theta - want) / (1.0 + std::fabs(want)));

      const double beta0 = beta_of_alpha(alpha, e, d);
      const double fd_b = finite_difference(
          [&](double t) { return unwrap_to(beta_of_alpha(t, e, d), beta0); }, alpha, kFdStep);
      fd_beta.record(rel_error(fd_b, dbeta_dalpha(alpha, e, d)));
    }

    const double k = e.k();
    const double jump = 4.0 * kPi / std::fabs((1.0 - k) * (1.0 + k));
    const double p0 = poisson_antiderivative(alpha, e);
    const double fd_p = finite_difference(
        [&](double t) { return unwrap_to(poisson_antiderivative(t, e), p0, jump); }, alpha,
        kFdStep);
    fd_poisson.record(rel_error(fd_p, integrand(IntegralKind::Poisson, alpha, e)));

    const double t0 = i1_antiderivative(alpha, e);
    const double fd_t = finite_difference(
        [&](double t) { return unwrap_to(i1_antiderivative(t, e), t0); }, alpha, kFdStep);
    fd_i1.record(rel_error(fd_t, integrand(IntegralKind::I1, alpha, e)));

    const double fd_l = finite_difference([&](double t) { return i2_antiderivative(t, e); },
                                          alpha, kFdStep);
    fd_i2.record(rel_error(fd_l, integrand(IntegralKind::I2, alpha, e)));

    // Ex-centric variable: dex against d(alpha)/d(theta), away from tangency.
    ExCenter f = rng.excenter();
    double theta = rng.theta_in_domain(f);
    while (f.on_circle() || discriminant(theta, f) < 1e-1) {
      f = rng.excenter();
      theta = rng.theta_in_domain(f);
    }
    for (Determination d : kBoth) {
      const double a0 = alpha_of_theta(theta, f, d);
      const double fd_a = finite_difference(
          [&](double t) { return unwrap_to(alpha_of_theta(t, f, d), a0); }, theta, kFdStep);
      fd_dex.record(rel_error(fd_a, dex(theta, f, d)));
    }
  }

  CheckReport report;
  for (Tracker* t : {&fd_Dex, &fd_beta, &fd_dex, &fd_poisson, &fd_i1, &fd_i2}) {
    report.invariants.push_back(t->finish());
  }
  return report;
}

CheckReport geometric_suite(std::uint64_t seed, std::size_t samples) {
  Sampler rng(seed);
  Tracker equivalence("geometric_equivalence", 1e-10);
  Tracker same_sign("exterior_same_sign", 0.0);
  Tracker miss("no_intersection_outside_domain", 0.0);
  Tracker on_circle("oracle_points_on_circle", 1e-12);

  for (std::size_t i = 0; i < samples; ++i) {
    {
      const ExCenter e = rng.excenter();
      const double theta = rng.theta_in_domain(e);
      const auto [r1, r2] = rex_pair(theta, e);
      const auto hit = oracle::line_circle_intersection(theta, e);
      if (!hit) {
        equivalence.record(kInf);
      } else {
        equivalence.record(std::max(std::fabs(r1 - hit->first), std::fabs(r2 - hit->second)));
        const double px = e.k() * std::cos(e.eps());
        const double py = e.k() * std::sin(e.eps());
        double err = 0.0;
        for (double t : {hit->first, hit->second}) {
          const double x = px + t * std::cos(theta);
          const double y = py + t * std::sin(theta);
          err = std::max(err, std::fabs(x * x + y * y - 1.0));
        }
        on_circle.record(err);
      }
    }
    {
      const double magnitude = rng.uniform(1.0 + 1e-6, 3.0);
      const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const ExCenter e(sign * magnitude, rng.uniform(-kPi, kPi));
      const double theta = rng.theta_in_domain(e);
      const auto [r1, r2] = rex_pair(theta, e);
      const auto hit = oracle::line_circle_intersection(theta, e);
      const bool ok = hit && r1 * r2 > 0.0 && hit->first * hit->second > 0.0 &&
                      std::signbit(r1) == std::signbit(hit->first);
      same_sign.record(ok ? 0.0 : 1.0);

      // Directions with |sin(theta - eps)| > 1/|k| miss the circle on both arcs.
      const double half = std::asin(1.0 / magnitude);
      double psi = rng.uniform(half + 1e-6, kPi - half - 1e-6);
      if (rng.uniform(0.0, 1.0) < 0.5) {
        psi = -psi;
      }
      const double off = e.eps() + psi;
      bool rejected = false;
      try {
        static_cast<void>(rex(off, e, Determination::Principal));
      } catch (const OutOfDomain&) {
        rejected = true;
      }
      const bool missed = !oracle::line_circle_intersection(off, e).has_value();
      miss.record(rejected && missed ? 0.0 : 1.0);
    }
  }

  CheckReport report;
  for (Tracker* t : {&equivalence, &same_sign, &miss, &on_circle}) {
    report.invariants.push_back(t->finish());
  }
  return report;
}

CheckReport integral_suite(std::uint64_t seed, std::size_t samples) {
  Sampler rng(seed);
  Tracker vs_quad("closed_vs_quadrature", 1e-8);
  Tracker full_period("lift_full_period", 1e-9);
  Tracker sub_interval("lift_subinterval_vs_quadrature", 1e-7);

  const std::size_t count = std::max<std::size_t>(3, samples / 100);
  for (std::size_t i = 0; i < count; ++i) {
    const ExCenter e = away_from_circle(rng, 0.05);
    const double start = rng.uniform(-kPi, kPi);
    const double a = rng.uniform(-kTwoPi, kTwoPi);
    const double b = a + rng.uniform(0.0, kTwoPi);
    for (IntegralKind kind : {IntegralKind::Poisson, IntegralKind::I1, IntegralKind::I2}) {
      const IntegralResult closed = kind == IntegralKind::Poisson ? poisson_closed(e)
                                    : kind == IntegralKind::I1    ? i1_closed(e)
                                                                  : i2_closed(e);
      const auto f = [&](double x) { return integrand(kind, x, e); };
      const auto q = oracle::integrate(f, -kPi, kPi, 1e-11 * (1.0 + std::fabs(closed.value)));
      vs_quad.record(q.converged ? rel_error(q.value, closed.value) : kInf);

      const auto lifted = definite_via_antiderivative(kind, start, start + kTwoPi, e);
      full_period.record(rel_error(lifted.value, closed.value));

      const auto part = oracle::integrate(f, a, b, 1e-11);
      const auto lifted_part = definite_via_antiderivative(kind, a, b, e);
      sub_interval.record(part.converged ? std::fabs(lifted_part.value - part.value) : kInf);
    }
  }

  CheckReport report;
  for (Tracker* t : {&vs_quad, &full_period, &sub_interval}) {
    report.invariants.push_back(t->finish());
  }
  return report;
}

CheckReport run_all(std::uint64_t seed, std::size_t samples) {
  CheckReport report = identity_suite(seed, samples);
  report.append(derivative_suite(seed + 1, samples));
  report.append(geometric_suite(seed + 2, samples));
  report.append(integral_suite(seed + 3, samples));
  return report;
}

}  // namespace excentric::check
