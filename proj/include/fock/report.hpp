#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fock/classicality.hpp"
#include "fock/model.hpp"
#include "fock/types.hpp"

namespace fock {

enum class ReportFormat { Csv, Md, Json };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// ---- diagnose ----------------------------------------------------------

struct DiagnosticsRecord {
  std::string pair_id;
  std::string exemplar;
  RowKind kind = RowKind::Conjunction;
  double delta = 0.0;
  double k = 0.0;
  double doub = 0.0;
  std::optional<double> l;  // negation rows only
  bool representable = false;
  std::vector<Condition> violated;
};

struct DiagnosticsReport {
  std::vector<DiagnosticsRecord> records;
};

// One record per row and experiment kind, in input order (conjunction
// before negation for rows carrying both).
DiagnosticsReport diagnose(const Dataset& dataset, double l_tolerance = 1e-9);

// ---- kolmogorov --------------------------------------------------------

struct ClassicalityRecord {
  std::string pair_id;
  std::string exemplar;
  RowKind kind = RowKind::Conjunction;
  ClassicalityVerdict verdict;
};

struct ClassicalityReport {
  std::vector<ClassicalityRecord> records;
};

ClassicalityReport kolmogorov_check(const Dataset& dataset, double l_tolerance = 1e-9);

// ---- fit ---------------------------------------------------------------

struct FitRecord {
  std::string pair_id;
  std::string exemplar;
  RowKind kind = RowKind::Conjunction;
  FitStrategy::Kind strategy = FitStrategy::Kind::BalancedTheta;
  FitStatus status = FitStatus::Infeasible;
  std::optional<double> m2;
  std::optional<double> n2;
  std::optional<double> theta_deg;  // absent for arbitrary-angle and infeasible rows
  std::optional<double> mu_model;
  double mu_target = 0.0;
  std::optional<double> abs_err;
};

struct FitReport {
  std::vector<FitRecord> records;
};

// Fits every row of the dataset, one record per experiment kind. For the
// FromTable strategy each row's published m2 is looked up in `fitted`
// (throws Error on a missing key).
FitReport fit_all(const Dataset& dataset, const FitStrategy& strategy,
                  const std::vector<FittedRow>* fitted = nullptr,
                  double degenerate_tolerance = 1e-9);

// ---- verify ------------------------------------------------------------

enum class VerifyStatus { Ok, Infeasible, Degenerate };

std::string_view to_string(VerifyStatus status);

struct VerificationRecord {
  std::string pair_id;
  std::string exemplar;
  RowKind kind = RowKind::Conjunction;
  double mu_table = 0.0;
  std::optional<double> mu_model;
  std::optional<double> abs_err;
  VerifyStatus status = VerifyStatus::Ok;
  AttainableRange bound;  // over all (m2, theta); reported for infeasible rows
};

struct VerificationSummary {
  std::size_t rows_total = 0;
  std::size_t rows_ok = 0;
  std::size_t rows_infeasible = 0;
  std::size_t rows_degenerate = 0;
  double max_abs_err = 0.0;  // over non-infeasible rows
  bool passed = false;       // no non-infeasible row exceeded the tolerance
};

struct VerificationReport {
  std::vector<VerificationRecord> records;
  VerificationSummary summary;
  double tolerance = 0.0;
};

// Solves theta from each published m2 (FromTable), evaluates the model and
// compares against the measured weight. Rows with out-of-range published
// parameters, or whose target lies outside the attainable range, are
// classified infeasible; degenerate rows failing the tolerance while the
// target stays attainable are classified Degenerate. Throws Error when the
// key sets of `dataset` and `fitted` disagree.
VerificationReport verify(const Dataset& dataset, const std::vector<FittedRow>& fitted,
                          double tolerance = 0.02);

// ---- rendering ---------------------------------------------------------

void render(std::ostream& out, const DiagnosticsReport& report, ReportFormat format);
void render(std::ostream& out, const ClassicalityReport& report, ReportFormat format);
void render(std::ostream& out, const FitReport& report, ReportFormat format);
void render(std::ostream& out, const VerificationReport& report, ReportFormat format);

std::string join_conditions(std::span<const Condition> violated);

}  // namespace fock
