#include "excentric/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "excentric/check_suite.hpp"
#include "excentric/errors.hpp"
#include "excentric/functions.hpp"
#include "excentric/integral.hpp"
#include "excentric/verify.hpp"

namespace excentric::cli {

namespace {

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Variable { Theta, Alpha };

struct FunctionEntry {
  Variable variable;
  std::function<double(double, const ExCenter&, Determination)> eval;
};

const std::map<std::string, FunctionEntry>& function_table() {
  static const std::map<std::string, FunctionEntry> table = {
      {"rex", {Variable::Theta, [](double x, const ExCenter& e, Determination d) { return rex(x, e, d); }}},
      {"dex", {Variable::Theta, [](double x, const ExCenter& e, Determination d) { return dex(x, e, d); }}},
      {"alpha", {Variable::Theta, [](double x, const ExCenter& e, Determination d) { return alpha_of_theta(x, e, d); }}},
      {"Rex", {Variable::Alpha, [](double x, const ExCenter& e, Determination d) { return Rex(x, e, d); }}},
      {"Dex", {Variable::Alpha, [](double x, const ExCenter& e, Determination d) { return Dex(x, e, d); }}},
      {"beta", {Variable::Alpha, [](double x, const ExCenter& e, Determination d) { return beta_of_alpha(x, e, d); }}},
      {"nip", {Variable::Alpha, [](double x, const ExCenter& e, Determination) { return nip(x, e); }}},
      {"theta", {Variable::Alpha, [](double x, const ExCenter& e, Determination d) { return theta_of_alpha(x, e, d); }}},
  };
  return table;
}

IntegralKind parse_kind(const std::string& name) {
  if (name == "poisson") return IntegralKind::Poisson;
  if (name == "i1") return IntegralKind::I1;
  if (name == "i2") return IntegralKind::I2;
  throw UsageError("unknown integral kind '" + name + "' (expected poisson, i1 or i2)");
}

Determination parse_determination(int det) {
  if (det == 1) return Determination::Principal;
  if (det == 2) return Determination::Secondary;
  throw UsageError("--det must be 1 or 2");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw UsageError("not a finite number: '" + s + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> values;
  for (const auto& part : split(s, ',')) {
    if (!part.empty()) {
      values.push_back(parse_double(part));
    }
  }
  return values;
}

// lo:hi:n, n >= 1 evenly spaced points including both ends.
std::vector<double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) {
    throw UsageError("--k-range expects lo:hi:n");
  }
  const double lo = parse_double(parts[0]);
  const double hi = parse_double(parts[1]);
  const double n = parse_double(parts[2]);
  if (n < 1.0 || n != std::floor(n)) {
    throw UsageError("--k-range point count must be a positive integer");
  }
  const auto count = static_cast<std::size_t>(n);
  std::vector<double> values;
  for (std::size_t i = 0; i < count; ++i) {
    values.push_back(count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1));
  }
  return values;
}

struct EvalArgs {
  std::string functions;
  double k = 0.0;
  double eps = 0.0;
  int det = 1;
  double from = 0.0;
  double to = 0.0;
  int steps = 101;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.steps < 2) {
    throw UsageError("--steps must be at least 2");
  }
  if (!(a.from < a.to)) {
    throw UsageError("--from must be less than --to");
  }
  const Determination d = parse_determination(a.det);
  const ExCenter e(a.k, a.eps);

  std::vector<std::string> names = split(a.functions, ',');
  if (names.empty()) {
    throw UsageError("no function requested");
  }
  std::vector<const FunctionEntry*> entries;
  for (const auto& name : names) {
    const auto it = function_table().find(name);
    if (it == function_table().end()) {
      throw UsageError("unknown function '" + name +
                       "' (expected rex, Rex, dex, Dex, beta, nip, theta, alpha)");
    }
    entries.push_back(&it->second);
  }
  const Variable variable = entries.front()->variable;
  for (const auto* entry : entries) {
    if (entry->variable != variable) {
      throw UsageError("cannot mix functions of theta and of alpha in one table");
    }
  }

  out << (variable == Variable::Theta ? "theta" : "alpha");
  for (const auto& name : names) {
    out << ',' << name;
  }
  out << '\n';

  bool any_value = false;
  for (int i = 0; i < a.steps; ++i) {
    const double x = i + 1 == a.steps ? a.to : a.from + (a.to - a.from) * double(i) / double(a.steps - 1);
    out << number(x);
    for (const auto* entry : entries) {
      out << ',';
      try {
        out << number(entry->eval(x, e, d));
        any_value = true;
      } catch (const OutOfDomain&) {
      } catch (const Singularity&) {
      }
    }
    out << '\n';
  }
  return any_value ? kSuccess : kDomain;
}

struct IntegrateArgs {
  std::string kind;
  double k = 0.0;
  double eps = 0.0;
  std::string method = "both";
  double tol = 1e-8;
};

int cmd_integrate(const IntegrateArgs& a, std::ostream& out) {
  const IntegralKind kind = parse_kind(a.kind);
  if (a.method != "closed" && a.method != "quad" && a.method != "both") {
    throw UsageError("--method must be closed, quad or both");
  }
  if (!(a.tol > 0.0)) {
    throw UsageError("--tol must be positive");
  }
  const ExCenter e(a.k, a.eps);
  const double tolerance = verify::row_tolerance(e, a.tol);
  const IntegralResult closed = verify::closed_form(kind, e);

  out << "kind: " << to_string(kind) << '\n';
  out << "k: " << number(e.k()) << '\n';
  out << "eps: " << number(e.eps()) << '\n';
  if (a.method != "quad") {
    out << "closed: " << number(closed.value) << ' ' << to_string(closed.method) << '\n';
  }
  if (a.method == "closed") {
    return kSuccess;
  }

  const double request = 1e-2 * tolerance * (1.0 + std::fabs(closed.value));
  const auto q = verify::full_period_oracle(kind, e, request);
  out << "quad: " << number(q.value) << ' '
      << (e.on_circle() ? to_string(Method::PrincipalValue) : to_string(Method::Quadrature))
      << " err=" << number(q.err_estimate) << " evaluations=" << q.evaluations
      << (q.converged ? "" : " not-converged") << '\n';
  if (a.method == "quad") {
    return q.converged ? kSuccess : kMismatch;
  }

  const bool pass = verify::agrees(closed.value, q, tolerance);
  out << "absdiff: " << number(std::fabs(closed.value - q.value)) << '\n';
  out << "tolerance: " << number(tolerance) << '\n';
  out << "result: " << (pass ? "pass" : "fail") << '\n';
  return pass ? kSuccess : kMismatch;
}

struct SweepArgs {
  std::string kind;
  std::string k_list;
  std::string k_range;
  std::string eps_list = "0";
  double tol = 1e-8;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const IntegralKind kind = parse_kind(a.kind);
  if (!a.k_list.empty() && !a.k_range.empty()) {
    throw UsageError("give either --k-list or --k-range, not both");
  }
  const std::vector<double> ks = a.k_range.empty() ? parse_list(a.k_list) : parse_range(a.k_range);
  const std::vector<double> epss = parse_list(a.eps_list);
  if (ks.empty() || epss.empty()) {
    throw UsageError("sweep needs a nonempty k grid and eps grid");
  }
  if (!(a.tol > 0.0)) {
    throw UsageError("--tol must be positive");
  }

  out << "k,eps,closed,quad,absdiff,pass\n";
  bool all = true;
  for (double k : ks) {
    for (double eps : epss) {
      const ExCenter e(k, eps);
      const double tolerance = verify::row_tolerance(e, a.tol);
      const IntegralResult closed = verify::closed_form(kind, e);
      const auto q = verify::full_period_oracle(kind, e, 1e-2 * tolerance * (1.0 + std::fabs(closed.value)));
      const bool pass = verify::agrees(closed.value, q, tolerance);
      all = all && pass;
      out << number(k) << ',' << number(eps) << ',' << number(closed.value) << ','
          << number(q.value) << ',' << number(std::fabs(closed.value - q.value)) << ','
          << (pass ? "pass" : "fail") << '\n';
    }
  }
  return all ? kSuccess : kMismatch;
}

struct CheckArgs {
  std::uint64_t seed = 42;
  long long samples = 1000;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  if (a.samples < 1) {
    throw UsageError("--samples must be at least 1");
  }
  const auto report = check::run_all(a.seed, static_cast<std::size_t>(a.samples));
  out << "invariant,samples,max_error,tolerance,pass\n";
  for (const auto& r : report.invariants) {
    out << r.name << ',' << r.samples << ',' << number(r.max_error) << ','
        << number(r.tolerance) << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
  out << "overall,,,," << (report.pass() ? "pass" : "fail") << '\n';
  return report.pass() ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ex-centric circular functions and Poisson-type integrals", "excentric"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Also write the output to this file");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Tabulate functions over an angle range as CSV");
  eval->add_option("functions", eval_args.functions,
                   "Comma-separated: rex, dex, alpha (of theta) or Rex, Dex, beta, nip, theta (of alpha)")
      ->required();
  eval->add_option("--k", eval_args.k, "Numeric ex-centricity")->required();
  eval->add_option("--eps", eval_args.eps, "Angular position of the ex-center (radians)");
  eval->add_option("--det", eval_args.det, "Determination: 1 principal, 2 secondary");
  eval->add_option("--from", eval_args.from, "First sample (radians)")->required();
  eval->add_option("--to", eval_args.to, "Last sample (radians)")->required();
  eval->add_option("--steps", eval_args.steps, "Number of samples (>= 2)");
  eval->add_option("--out", out_path, "Also write the output to this file");

  IntegrateArgs integrate_args;
  auto* integrate = app.add_subcommand("integrate", "Full-period integral by closed form and/or quadrature");
  integrate->add_option("kind", integrate_args.kind, "poisson, i1 or i2")->required();
  integrate->add_option("--k", integrate_args.k, "Numeric ex-centricity")->required();
  integrate->add_option("--eps", integrate_args.eps, "Angular position of the ex-center (radians)");
  integrate->add_option("--method", integrate_args.method, "closed, quad or both");
  integrate->add_option("--tol", integrate_args.tol, "Comparison tolerance (relative to 1 + |value|)");
  integrate->add_option("--out", out_path, "Also write the output to this file");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Closed form against quadrature over a (k, eps) grid");
  sweep->add_option("kind", sweep_args.kind, "poisson, i1 or i2")->required();
  sweep->add_option("--k-list", sweep_args.k_list, "Comma-separated k values");
  sweep->add_option("--k-range", sweep_args.k_range, "lo:hi:n evenly spaced k values");
  sweep->add_option("--eps-list", sweep_args.eps_list, "Comma-separated eps values");
  sweep->add_option("--tol", sweep_args.tol, "Comparison tolerance (relative to 1 + |value|)");
  sweep->add_option("--out", out_path, "Also write the output to this file");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the randomized invariant suites");
  check->add_option("--seed", check_args.seed, "Random seed");
  check->add_option("--samples", check_args.samples, "Samples per invariant (>= 1)");
  check->add_option("--out", out_path, "Also write the output to this file");

  std::vector<const char*> argv{"excentric"};
  for (const auto& s : args) {
    argv.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (eval->parsed()) {
      code = cmd_eval(eval_args, buffer);
    } else if (integrate->parsed()) {
      code = cmd_integrate(integrate_args, buffer);
    } else if (sweep->parsed()) {
      code = cmd_sweep(sweep_args, buffer);
    } else {
      code = cmd_check(check_args, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfDomain& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const Singularity& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }

  const std::string text = buffer.str();
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
  }
  if (code == kDomain) {
    err << "error: every sample lies outside the domain\n";
  }
  return code;
}

}  // namespace excentric::cli
