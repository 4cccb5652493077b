#include "excentric/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "excentric/errors.hpp"

namespace excentric::oracle {

namespace {

// Kronrod 15-point abscissae (descending, last is the center) and weights,
// with the embedded 7-point Gauss weights on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double err;
  bool operator<(const Segment& other) const { return err < other.err; }
};

class CountingIntegrand {
 public:
  explicit CountingIntegrand(const Integrand& f) : f_(f) {}

  double operator()(double x) {
    ++count_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      throw InvalidArgument("quadrature: integrand is not finite at a sample point");
    }
    return y;
  }

  [[nodiscard]] std::size_t count() const { return count_; }

 private:
  const Integrand& f_;
  std::size_t count_ = 0;
};

Segment gauss_kronrod(CountingIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * pair;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

QuadratureOutcome integrate_counted(CountingIntegrand& f, double a, double b, double tol,
                                    const QuadratureLimits& limits) {
  QuadratureOutcome out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> queue;
  queue.push(gauss_kronrod(f, a, b));
  double total_err = queue.top().err;
  while (total_err > tol) {
    if (queue.size() >= limits.max_intervals) {
      break;
    }
    const Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      break;  // interval cannot be split further in double precision
    }
    queue.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
  }
  // Re-sum from scratch; the running total drifts.
  double value = 0.0;
  double err = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().err;
    queue.pop();
  }
  out.value = value;
  out.err_estimate = err;
  out.converged = err <= tol;
  return out;
}

}  // namespace

QuadratureOutcome integrate(const Integrand& f, double a, double b, double tol,
                            QuadratureLimits limits) {
  if (!(tol > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("integrate: tolerance must be positive and limits finite");
  }
  CountingIntegrand counted(f);
  QuadratureOutcome out = a <= b ? integrate_counted(counted, a, b, tol, limits)
                                 : integrate_counted(counted, b, a, tol, limits);
  if (a > b) {
    out.value = -out.value;
  }
  out.evaluations = counted.count();
  return out;
}

QuadratureOutcome integrate_pv(const Integrand& f, double a, double b,
                               std::span<const double> poles, double tol, PvOptions options) {
  if (!(tol > 0.0) || !(a < b)) {
    throw InvalidArgument("integrate_pv: need a < b and a positive tolerance");
  }
  std::vector<double> sorted(poles.begin(), poles.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) {
    return integrate(f, a, b, tol);
  }
  double delta0 = options.delta0 > 0.0 ? options.delta0 : std::min(b - a, 1.0) / 8.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double p = sorted[i];
    if (!(p > a && p < b)) {
      throw InvalidArgument("integrate_pv: poles must lie strictly inside (a, b)");
    }
    const double left = i == 0 ? p - a : p - sorted[i - 1];
    const double right = i + 1 == sorted.size() ? b - p : sorted[i + 1] - p;
    delta0 = std::min({delta0, 0.5 * left, 0.5 * right});
  }
  if (!(delta0 > 0.0)) {
    throw InvalidArgument("integrate_pv: coincident poles");
  }

  const double piece_tol = 1e-2 * tol;
  QuadratureOutcome out;
  std::size_t evaluations = 0;

  // Everything outside the excised neighbourhoods.
  double outer = 0.0;
  double lo = a;
  for (double p : sorted) {
    const auto piece = integrate(f, lo, p - delta0, piece_tol / double(sorted.size() + 1));
    outer += piece.value;
    evaluations += piece.evaluations;
    lo = p + delta0;
  }
  {
    const auto piece = integrate(f, lo, b, piece_tol / double(sorted.size() + 1));
    outer += piece.value;
    evaluations += piece.evaluations;
  }

  // Symmetric pairs around every pole; the odd singular part cancels.
  const Integrand symmetric = [&f, &sorted](double t) {
    double s = 0.0;
    for (double p : sorted) {
      s += f(p + t) + f(p - t);
    }
    return s;
  };

  // Richardson table in the excision radius; the remainder of a symmetric
  // excision is odd in delta, so the columns cancel delta, delta^3, ...
  constexpr int kColumns = 4;
  std::vector<double> previous_row;
  double excised = outer;
  double delta = delta0;
  double previous_estimate = 0.0;
  bool have_previous = false;
  constexpr int kMaxGrowth = 4;
  double previous_diff = HUGE_VAL;
  int growing = 0;
  const int levels = std::max(options.max_levels, 2);
  for (int level = 0; level <= levels; ++level) {
    if (level > 0) {
      const double next = 0.5 * delta;
      QuadratureOutcome ring;
      try {
        ring = integrate(symmetric, next, delta, piece_tol / double(levels));
      } catch (const InvalidArgument&) {
        break;  // the integrand overflowed next to the pole: no finite limit
      }
      evaluations += ring.evaluations;
      excised += ring.value;
      delta = next;
    }
    std::vector<double> row{excised};
    for (int j = 1; j <= std::min<int>(level, kColumns); ++j) {
      const double factor = std::ldexp(1.0, 2 * j - 1);
      row.push_back((factor * row[j - 1] - previous_row[j - 1]) / (factor - 1.0));
    }
    const double estimate = row.back();
    if (have_previous && level >= 2) {
      const double diff = std::fabs(estimate - previous_estimate);
      out.value = estimate;
      out.err_estimate = diff;
      if (diff <= tol) {
        out.converged = true;
        break;
      }
      // A non-integrable pole makes the excised integral grow like 1/delta;
      // once the corrections keep growing there is nothing to extrapolate.
      growing = diff > previous_diff ? growing + 1 : 0;
      if (growing >= kMaxGrowth) {
        break;
      }
      previous_diff = diff;
    } else {
      out.value = estimate;
    }
    previous_estimate = estimate;
    have_previous = true;
    previous_row = std::move(row);
  }
  out.evaluations = evaluations;
  return out;
}

std::optional<std::pair<double, double>> line_circle_intersection(double theta,
                                                                  const ExCenter& e) {
  const double px = e.k() * std::cos(e.eps());
  const double py = e.k() * std::sin(e.eps());
  const double ux = std::cos(theta);
  const double uy = std::sin(theta);
  // |P + t u|^2 = 1  =>  t^2 + 2 b t + c = 0
  const double b = px * ux + py * uy;
  const double c = px * px + py * py - 1.0;
  double disc = b * b - c;
  if (disc < -kSingularTol) {
    return std::nullopt;
  }
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  if (b >= 0.0) {
    const double t2 = -b - root;
    const double t1 = t2 == 0.0 ? 0.0 : c / t2;
    return std::pair{std::max(t1, t2), std::min(t1, t2)};
  }
  const double t1 = -b + root;
  const double t2 = c / t1;
  return std::pair{std::max(t1, t2), std::min(t1, t2)};
}

double finite_difference(const Integrand& f, double x, double h) {
  if (!(h > 0.0) || !std::isfinite(x)) {
    throw InvalidArgument("finite_difference: need h > 0 and finite x");
  }
  const double forward = f(x + h);
  const double backward = f(x - h);
  if (!std::isfinite(forward) || !std::isfinite(backward)) {
    throw InvalidArgument("finite_difference: non-finite sample");
  }
  return (forward - backward) / (2.0 * h);
}

}  // namespace excentric::oracle
