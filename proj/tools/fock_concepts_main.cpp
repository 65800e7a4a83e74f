// fock-concepts: batch analysis of concept-membership survey data.
//
// Subcommands: diagnose, kolmogorov, fit, verify, ingest, simulate.
// Inputs default to the bundled reference dataset where that makes sense.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fock/bundled.hpp"
#include "fock/csv.hpp"
#include "fock/ratings.hpp"
#include "fock/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

fock::Dataset load_dataset(const std::string& path) {
  if (path.empty()) return fock::bundled_dataset();
  std::ifstream in(path);
  if (!in) throw fock::Error("cannot open input file: " + path);
  return fock::read_weights_csv(in);
}

std::vector<fock::FittedRow> load_fitted(const std::string& path) {
  if (path.empty()) return fock::bundled_fitted();
  std::ifstream in(path);
  if (!in) throw fock::Error("cannot open fitted file: " + path);
  return fock::read_fitted_csv(in);
}

// Renders into the output file or stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw fock::Error("cannot open output file: " + path);
  fn(out);
}

fock::ReportFormat parse_format_or_throw(const std::string& text) {
  auto f = fock::parse_report_format(text);
  if (!f) throw fock::Error("unknown format: " + text);
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept-membership diagnostics and two-sector model tooling"};
  app.require_subcommand(1);

  std::string input;
  std::string fitted_path;
  std::string output;
  std::string format_text = "csv";
  std::string strategy_text = "balanced-theta";
  double tolerance = 0.02;
  double l_tolerance = 1e-9;
  double m2 = 0.0;
  std::uint64_t seed = 1;
  int participants = 100;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format: csv|md|json")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    cmd->add_option("--output", output, "Write the report to this file instead of stdout");
  };

  auto* diagnose_cmd = app.add_subcommand("diagnose", "Classicality diagnostics per row");
  diagnose_cmd->add_option("--input", input, "Weights CSV (default: bundled dataset)");
  diagnose_cmd->add_option("--l-tolerance", l_tolerance, "Tolerance on 1 - muB - mu(not B)");

  auto* kolmogorov_cmd =
      app.add_subcommand("kolmogorov", "Classical representability with explicit atoms");
  kolmogorov_cmd->add_option("--input", input, "Weights CSV (default: bundled dataset)");
  kolmogorov_cmd->add_option("--l-tolerance", l_tolerance, "Tolerance on 1 - muB - mu(not B)");

  auto* fit_cmd = app.add_subcommand("fit", "Fit sector weights and interference angles");
  fit_cmd->add_option("--input", input, "Weights CSV (default: bundled dataset)");
  fit_cmd->add_option("--fitted", fitted_path,
                      "Fitted CSV supplying m2 for --strategy table (default: bundled)");
  fit_cmd->add_option("--strategy", strategy_text, "table|balanced-theta|fixed-m2")
      ->check(CLI::IsMember({"table", "balanced-theta", "fixed-m2"}));
  fit_cmd->add_option("--m2", m2, "Sector-2 weight for --strategy fixed-m2");
  fit_cmd->add_option("--tolerance", tolerance, "Match tolerance for arbitrary-angle rows");

  auto* verify_cmd =
      app.add_subcommand("verify", "Reproduce measured weights from fitted parameters");
  verify_cmd->add_option("--input", input, "Weights CSV (default: bundled dataset)");
  verify_cmd->add_option("--fitted", fitted_path, "Fitted CSV (default: bundled)");
  verify_cmd->add_option("--tolerance", tolerance, "Max allowed |model - table|");

  auto* ingest_cmd = app.add_subcommand("ingest", "Aggregate raw ratings into weights");
  ingest_cmd->add_option("--input", input, "Ratings CSV")->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Draw synthetic ratings reproducing a weights file");
  simulate_cmd->add_option("--input", input, "Weights CSV (default: bundled dataset)");
  simulate_cmd->add_option("--participants", participants, "Ratings per concept cell")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "Random seed");

  for (CLI::App* cmd :
       {diagnose_cmd, kolmogorov_cmd, fit_cmd, verify_cmd, ingest_cmd, simulate_cmd}) {
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/error text
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    fock::ReportFormat format = parse_format_or_throw(format_text);

    if (diagnose_cmd->parsed()) {
      auto report = fock::diagnose(load_dataset(input), l_tolerance);
      with_output(output, [&](std::ostream& out) { fock::render(out, report, format); });
      return kExitOk;
    }

    if (kolmogorov_cmd->parsed()) {
      auto report = fock::kolmogorov_check(load_dataset(input), l_tolerance);
      with_output(output, [&](std::ostream& out) { fock::render(out, report, format); });
      return kExitOk;
    }

    if (fit_cmd->parsed()) {
      fock::FitStrategy strategy = fock::FitStrategy::balanced_theta();
      std::vector<fock::FittedRow> fitted;
      const std::vector<fock::FittedRow>* fitted_ptr = nullptr;
      if (strategy_text == "table") {
        strategy = fock::FitStrategy::from_table(0.0);  // per-row m2 comes from the table
        fitted = load_fitted(fitted_path);
        fitted_ptr = &fitted;
      } else if (strategy_text == "fixed-m2") {
        strategy = fock::FitStrategy::fixed_m2(m2);
      }
      auto report = fock::fit_all(load_dataset(input), strategy, fitted_ptr, tolerance);
      with_output(output, [&](std::ostream& out) { fock::render(out, report, format); });
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      auto report = fock::verify(load_dataset(input), load_fitted(fitted_path), tolerance);
      with_output(output, [&](std::ostream& out) { fock::render(out, report, format); });
      const auto& s = report.summary;
      std::cerr << "verify: " << s.rows_ok << " ok, " << s.rows_infeasible << " infeasible, "
                << s.rows_degenerate << " degenerate of " << s.rows_total
                << " rows; max_abs_err " << s.max_abs_err << (s.passed ? "; passed" : "; FAILED")
                << "\n";
      return s.passed ? kExitOk : kExitVerifyFailed;
    }

    if (ingest_cmd->parsed()) {
      std::ifstream in(input);
      if (!in) throw fock::Error("cannot open input file: " + input);
      auto ratings = fock::parse_ratings(in);
      auto dataset = fock::aggregate(ratings);
      with_output(output, [&](std::ostream& out) { fock::write_weights_csv(out, dataset); });
      return kExitOk;
    }

    if (simulate_cmd->parsed()) {
      auto dataset = load_dataset(input);
      std::vector<fock::Rating> all;
      for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
        // Per-row seed keeps rows independent and the whole file reproducible.
        auto ratings = fock::simulate_ratings(dataset.rows[i], participants,
                                              seed + static_cast<std::uint64_t>(i));
        all.insert(all.end(), ratings.begin(), ratings.end());
      }
      with_output(output, [&](std::ostream& out) { fock::write_ratings_csv(out, all); });
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
