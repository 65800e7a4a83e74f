#include "fock/model.hpp"

#include <algorithm>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unit_interval(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw Error(std::string(name) + " outside [0,1]: " + std::to_string(v));
  }
}

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// sqrt(1-a) sqrt(1-b), the interference amplitude.
double interference_factor(const RegimeParams& rp) {
  double fa = 1.0 - rp.a;
  double fb = 1.0 - rp.b;
  if (fa <= 0.0 || fb <= 0.0) return 0.0;
  return std::sqrt(fa) * std::sqrt(fb);
}

}  // namespace

RegimeParams regime_params(double mu_a, double mu_second) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_second, "mu_second");
  RegimeParams rp;
  if (mu_a + mu_second <= 1.0) {
    rp.regime = Regime::SumLE1;
    rp.a = 1.0 - mu_a;
    rp.b = 1.0 - mu_second;
  } else {
    rp.regime = Regime::SumGT1;
    rp.a = mu_a;
    rp.b = mu_second;
  }
  return rp;
}

void FockParameters::validate() const {
  if (!(m2 >= 0.0 && m2 <= 1.0) || !(n2 >= 0.0 && n2 <= 1.0)) {
    throw Error("sector weights outside [0,1]: m2=" + std::to_string(m2) +
                " n2=" + std::to_string(n2));
  }
  if (std::abs(m2 + n2 - 1.0) > 1e-12) {
    throw Error("sector weights do not sum to one: m2=" + std::to_string(m2) +
                " n2=" + std::to_string(n2));
  }
  if (theta_deg && !std::isfinite(*theta_deg)) {
    throw Error("non-finite interference angle");
  }
}

std::string_view to_string(ConnectiveKind kind) {
  return kind == ConnectiveKind::Conjunction ? "conjunction" : "disjunction";
}

double interference_term(const RegimeParams& rp, double theta_deg) {
  double factor = interference_factor(rp);
  if (factor == 0.0) return 0.0;
  return factor * std::cos(deg_to_rad(theta_deg));
}

double sector2_value(ConnectiveKind kind, double mu_a, double mu_second) {
  double product = mu_a * mu_second;
  return kind == ConnectiveKind::Conjunction ? product : mu_a + mu_second - product;
}

double eval_combination(ConnectiveKind kind, double mu_a, double mu_second,
                        const FockParameters& params) {
  params.validate();
  RegimeParams rp = regime_params(mu_a, mu_second);
  double factor = interference_factor(rp);
  double interference = 0.0;
  if (params.n2 > 0.0 && factor > 0.0) {
    if (!params.theta_deg) {
      throw Error("eval: a concrete angle is required when interference is active");
    }
    interference = factor * std::cos(deg_to_rad(*params.theta_deg));
  }
  double sector1 = 0.5 * (mu_a + mu_second) + interference;
  double value = params.m2 * sector2_value(kind, mu_a, mu_second) + params.n2 * sector1;
  if (value < -1e-9 || value > 1.0 + 1e-9) {
    throw Error("eval: model value outside [0,1]: " + std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

double eval_conjunction(double mu_a, double mu_second, const FockParameters& params) {
  return eval_combination(ConnectiveKind::Conjunction, mu_a, mu_second, params);
}

double eval_disjunction(double mu_a, double mu_b, const FockParameters& params) {
  return eval_combination(ConnectiveKind::Disjunction, mu_a, mu_b, params);
}

AttainableRange attainable_range(ConnectiveKind kind, double mu_a, double mu_second) {
  RegimeParams rp = regime_params(mu_a, mu_second);
  double factor = interference_factor(rp);
  double s2 = sector2_value(kind, mu_a, mu_second);
  double avg = 0.5 * (mu_a + mu_second);
  // Linear in m2 between the sector-1 extremes (m2 = 0) and the pure
  // sector-2 value (m2 = 1).
  return {std::min(s2, avg - factor), std::max(s2, avg + factor)};
}

AttainableRange attainable_range_at(ConnectiveKind kind, double mu_a, double mu_second,
                                    double m2) {
  require_unit_interval(m2, "m2");
  RegimeParams rp = regime_params(mu_a, mu_second);
  double factor = interference_factor(rp);
  double base = m2 * sector2_value(kind, mu_a, mu_second) +
                (1.0 - m2) * 0.5 * (mu_a + mu_second);
  double swing = (1.0 - m2) * factor;
  return {base - swing, base + swing};
}

ThetaSolution solve_theta(double mu_a, double mu_second, double mu_target, double m2,
                          ConnectiveKind kind, double degenerate_tolerance) {
  require_unit_interval(mu_target, "mu_target");
  if (!(m2 >= 0.0 && m2 < 1.0)) {
    throw Error("solve_theta: m2 must lie in [0,1): " + std::to_string(m2));
  }
  RegimeParams rp = regime_params(mu_a, mu_second);
  double factor = interference_factor(rp);
  double n2 = 1.0 - m2;
  double s2 = sector2_value(kind, mu_a, mu_second);
  double avg = 0.5 * (mu_a + mu_second);

  ThetaSolution sol;
  if (factor == 0.0) {
    double plain = m2 * s2 + n2 * avg;
    sol.status = std::abs(plain - mu_target) <= degenerate_tolerance
                     ? ThetaStatus::ArbitraryAngle
                     : ThetaStatus::DegenerateMismatch;
    return sol;
  }
  double cos_required = ((mu_target - m2 * s2) / n2 - avg) / factor;
  sol.cos_required = cos_required;
  if (std::abs(cos_required) > 1.0 + 1e-12) {
    sol.status = ThetaStatus::Infeasible;
    return sol;
  }
  sol.status = ThetaStatus::Ok;
  sol.theta_deg = rad_to_deg(std::acos(std::clamp(cos_required, -1.0, 1.0)));
  return sol;
}

namespace {

FitResult fit_at_m2(double mu_a, double mu_second, double mu_target, double m2,
                    ConnectiveKind kind, double degenerate_tolerance) {
  FitResult result;
  result.bound = attainable_range_at(kind, mu_a, mu_second, m2);
  if (m2 == 1.0) {
    double s2 = sector2_value(kind, mu_a, mu_second);
    if (std::abs(s2 - mu_target) <= degenerate_tolerance) {
      result.status = FitStatus::Ok;
      result.params = {1.0, 0.0, 90.0};
      result.mu_model = s2;
    }
    return result;
  }
  ThetaSolution sol = solve_theta(mu_a, mu_second, mu_target, m2, kind, degenerate_tolerance);
  switch (sol.status) {
    case ThetaStatus::Ok:
      result.status = FitStatus::Ok;
      result.params = {m2, 1.0 - m2, sol.theta_deg};
      result.mu_model = eval_combination(kind, mu_a, mu_second, result.params);
      break;
    case ThetaStatus::ArbitraryAngle:
      result.status = FitStatus::Degenerate;
      result.params = {m2, 1.0 - m2, std::nullopt};
      result.mu_model = eval_combination(kind, mu_a, mu_second, result.params);
      break;
    case ThetaStatus::Infeasible:
    case ThetaStatus::DegenerateMismatch:
      result.status = FitStatus::Infeasible;
      break;
  }
  return result;
}

FitResult fit_balanced(double mu_a, double mu_second, double mu_target, ConnectiveKind kind,
                       double degenerate_tolerance) {
  double s2 = sector2_value(kind, mu_a, mu_second);
  double avg = 0.5 * (mu_a + mu_second);

  FitResult result;
  result.bound = attainable_range(kind, mu_a, mu_second);
  if (std::abs(avg - s2) > 1e-15) {
    double m2 = (avg - mu_target) / (avg - s2);
    if (m2 >= 0.0 && m2 <= 1.0) {
      // Target sits between the sector values: interference-free solution.
      result.status = FitStatus::Ok;
      result.params = {m2, 1.0 - m2, 90.0};
      result.mu_model = eval_combination(kind, mu_a, mu_second, result.params);
      return result;
    }
  } else if (std::abs(mu_target - avg) <= degenerate_tolerance) {
    result.status = FitStatus::Ok;
    result.params = {0.5, 0.5, 90.0};
    result.mu_model = eval_combination(kind, mu_a, mu_second, result.params);
    return result;
  }
  // Outside the sector span the required cosine is monotone in m2, so the
  // angle closest to 90 degrees is reached at m2 = 0.
  FitResult at_zero = fit_at_m2(mu_a, mu_second, mu_target, 0.0, kind, degenerate_tolerance);
  at_zero.bound = result.bound;
  return at_zero;
}

}  // namespace

std::string_view to_string(FitStrategy::Kind kind) {
  switch (kind) {
    case FitStrategy::Kind::FromTable: return "table";
    case FitStrategy::Kind::BalancedTheta: return "balanced-theta";
    case FitStrategy::Kind::FixedM2: return "fixed-m2";
  }
  return "?";
}

std::string_view to_string(FitStatus status) {
  switch (status) {
    case FitStatus::Ok: return "ok";
    case FitStatus::Degenerate: return "degenerate";
    case FitStatus::Infeasible: return "infeasible";
  }
  return "?";
}

FitResult fit_parameters(double mu_a, double mu_second, double mu_target,
                         const FitStrategy& strategy, ConnectiveKind kind,
                         double degenerate_tolerance) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_second, "mu_second");
  require_unit_interval(mu_target, "mu_target");
  switch (strategy.kind) {
    case FitStrategy::Kind::FromTable:
    case FitStrategy::Kind::FixedM2:
      require_unit_interval(strategy.m2, "m2");
      return fit_at_m2(mu_a, mu_second, mu_target, strategy.m2, kind, degenerate_tolerance);
    case FitStrategy::Kind::BalancedTheta:
      return fit_balanced(mu_a, mu_second, mu_target, kind, degenerate_tolerance);
  }
  throw Error("fit_parameters: unknown strategy");
}

}  // namespace fock
