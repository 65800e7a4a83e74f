#pragma once

#include <optional>
#include <string_view>

#include "fock/types.hpp"

namespace fock {

// Reparameterization keeping every vector component real: weights are
// complemented when they sum to at most one (inclusive), kept as-is
// otherwise. In both regimes a + b - 1 >= 0.
enum class Regime { SumLE1, SumGT1 };

struct RegimeParams {
  Regime regime = Regime::SumLE1;
  double a = 0.0;  // regime parameter for the first concept
  double b = 0.0;  // regime parameter for the second (possibly negated) concept
};

RegimeParams regime_params(double mu_a, double mu_second);

// Sector weights and interference angle for one row. An absent angle means
// the interference term vanishes identically (a = 1 or b = 1) and any
// angle reproduces the same membership weight.
struct FockParameters {
  double m2 = 0.0;                        // sector-2 (product rule) weight
  double n2 = 1.0;                        // sector-1 (superposition) weight
  std::optional<double> theta_deg = 0.0;  // nullopt = arbitrary angle

  // Throws Error unless m2, n2 in [0,1] and m2 + n2 = 1 within 1e-12.
  void validate() const;
};

enum class ConnectiveKind { Conjunction, Disjunction };

std::string_view to_string(ConnectiveKind kind);

// sqrt(1-a) sqrt(1-b) cos(theta); identically zero when a = 1 or b = 1.
double interference_term(const RegimeParams& rp, double theta_deg);

// Sector-2 (two-copy) membership value: muA*muB for the conjunction,
// muA + muB - muA*muB for the disjunction.
double sector2_value(ConnectiveKind kind, double mu_a, double mu_second);

// Membership weight predicted by the two-sector model:
//   m2 * sector2 + n2 * ((muA + mu_second)/2 + interference).
// Throws Error when the angle is absent while interference would matter,
// or when the result leaves [0,1] by more than 1e-9 (result is clamped
// inside that margin).
double eval_combination(ConnectiveKind kind, double mu_a, double mu_second,
                        const FockParameters& params);
double eval_conjunction(double mu_a, double mu_second, const FockParameters& params);
double eval_disjunction(double mu_a, double mu_b, const FockParameters& params);

// Closed interval of membership values the model can reach.
struct AttainableRange {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double value, double tolerance = 0.0) const {
    return value >= lo - tolerance && value <= hi + tolerance;
  }
};

// Range over all admissible (m2, theta).
AttainableRange attainable_range(ConnectiveKind kind, double mu_a, double mu_second);
// Range over theta at a fixed sector split.
AttainableRange attainable_range_at(ConnectiveKind kind, double mu_a, double mu_second, double m2);

enum class ThetaStatus {
  Ok,                  // concrete angle found
  ArbitraryAngle,      // interference vanishes and the target already matches
  Infeasible,          // required cosine outside [-1, 1]
  DegenerateMismatch,  // interference vanishes but the target misses
};

struct ThetaSolution {
  ThetaStatus status = ThetaStatus::Infeasible;
  double theta_deg = 0.0;     // set when status == Ok, in [0, 180]
  double cos_required = 0.0;  // set when a concrete cosine was computed
};

// Exact inversion of the combination formula for theta at a fixed m2 in
// [0,1). degenerate_tolerance bounds |target - value| for the a=1 / b=1
// branch to count as a match.
ThetaSolution solve_theta(double mu_a, double mu_second, double mu_target, double m2,
                          ConnectiveKind kind, double degenerate_tolerance = 1e-9);

// How fit_parameters picks the sector split.
struct FitStrategy {
  enum class Kind {
    FromTable,      // solve theta at a published m2
    BalancedTheta,  // prefer theta = 90 degrees, solving m2 linearly
    FixedM2,        // solve theta at a caller-chosen m2
  };

  Kind kind = Kind::BalancedTheta;
  double m2 = 0.0;  // used by FromTable / FixedM2

  static FitStrategy from_table(double m2) { return {Kind::FromTable, m2}; }
  static FitStrategy balanced_theta() { return {Kind::BalancedTheta, 0.0}; }
  static FitStrategy fixed_m2(double m2) { return {Kind::FixedM2, m2}; }
};

std::string_view to_string(FitStrategy::Kind kind);

enum class FitStatus { Ok, Degenerate, Infeasible };

std::string_view to_string(FitStatus status);

struct FitResult {
  FitStatus status = FitStatus::Infeasible;
  FockParameters params;        // valid when status != Infeasible
  double mu_model = 0.0;        // model value at params (when not infeasible)
  AttainableRange bound;        // over all (m2, theta); reported for infeasible targets
};

// Fits (m2, theta) against a target membership weight. FromTable/FixedM2
// delegate to solve_theta at the given m2 (m2 = 1 allowed when the target
// equals the sector-2 value). BalancedTheta returns theta = 90 with the
// linear m2 whenever the target lies between the sector values, otherwise
// the feasible split whose angle is closest to 90 degrees.
FitResult fit_parameters(double mu_a, double mu_second, double mu_target,
                         const FitStrategy& strategy,
                         ConnectiveKind kind = ConnectiveKind::Conjunction,
                         double degenerate_tolerance = 1e-9);

}  // namespace fock
