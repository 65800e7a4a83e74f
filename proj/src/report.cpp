#include "fock/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "csv_util.hpp"

namespace fock {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v, int digits = 6) { return format_fixed(v, digits); }

std::string fmt_opt(const std::optional<double>& v, int digits = 6) {
  return v ? format_fixed(*v, digits) : std::string();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

ordered_json json_opt(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

struct RowInputs {
  double mu_a;
  double mu_second;
  double mu_target;
};

// Pulls the (muA, mu_second, mu_combination) triple for one experiment kind.
RowInputs row_inputs(const MembershipRow& row, RowKind kind) {
  if (kind == RowKind::Conjunction) {
    return {row.mu_a.value(), row.mu_b.value(), row.mu_a_and_b->value()};
  }
  return {row.mu_a.value(), row.mu_not_b->value(), row.mu_a_and_not_b->value()};
}

template <typename Fn>
void for_each_kind(const Dataset& dataset, Fn&& fn) {
  for (const auto& row : dataset.rows) {
    row.validate();
    if (row.has_kind(RowKind::Conjunction)) fn(row, RowKind::Conjunction);
    if (row.has_kind(RowKind::ConjunctionNegation)) fn(row, RowKind::ConjunctionNegation);
  }
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "md") return ReportFormat::Md;
  if (text == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::string_view to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Ok: return "ok";
    case VerifyStatus::Infeasible: return "infeasible";
    case VerifyStatus::Degenerate: return "degenerate";
  }
  return "?";
}

std::string join_conditions(std::span<const Condition> violated) {
  std::string out;
  for (const auto& c : violated) {
    if (!out.empty()) out.push_back(';');
    out += to_string(c);
  }
  return out;
}

// ---- diagnose ------------------------------------------------------------

DiagnosticsReport diagnose(const Dataset& dataset, double l_tolerance) {
  DiagnosticsReport report;
  for_each_kind(dataset, [&](const MembershipRow& row, RowKind kind) {
    DiagnosticsRecord rec;
    rec.pair_id = row.pair_id;
    rec.exemplar = row.exemplar;
    rec.kind = kind;
    if (kind == RowKind::Conjunction) {
      auto d = conjunction_diagnostics(row.mu_a.value(), row.mu_b.value(),
                                       row.mu_a_and_b->value());
      rec.delta = d.delta;
      rec.k = d.k;
      rec.doub = d.doub;
      auto verdict = check_conjunction_representability(row.mu_a.value(), row.mu_b.value(),
                                    row.mu_a_and_b->value());
      rec.representable = verdict.representable;
      rec.violated = std::move(verdict.violated);
    } else {
      auto d = negation_diagnostics(row.mu_a.value(), row.mu_b.value(), row.mu_not_b->value(),
                                    row.mu_a_and_not_b->value());
      rec.delta = d.delta;
      rec.k = d.k;
      rec.doub = d.doub;
      rec.l = d.l;
      auto verdict = check_negation_representability(row.mu_a.value(), row.mu_b.value(), row.mu_not_b->value(),
                                    row.mu_a_and_not_b->value(), l_tolerance);
      rec.representable = verdict.representable;
      rec.violated = std::move(verdict.violated);
    }
    report.records.push_back(std::move(rec));
  });
  return report;
}

// ---- kolmogorov ----------------------------------------------------------

ClassicalityReport kolmogorov_check(const Dataset& dataset, double l_tolerance) {
  ClassicalityReport report;
  for_each_kind(dataset, [&](const MembershipRow& row, RowKind kind) {
    ClassicalityRecord rec;
    rec.pair_id = row.pair_id;
    rec.exemplar = row.exemplar;
    rec.kind = kind;
    if (kind == RowKind::Conjunction) {
      rec.verdict =
          check_conjunction_representability(row.mu_a.value(), row.mu_b.value(), row.mu_a_and_b->value());
    } else {
      rec.verdict = check_negation_representability(row.mu_a.value(), row.mu_b.value(), row.mu_not_b->value(),
                                   row.mu_a_and_not_b->value(), l_tolerance);
    }
    report.records.push_back(std::move(rec));
  });
  return report;
}

// ---- fit -----------------------------------------------------------------

namespace {

using FittedKey = std::pair<std::string, std::string>;

std::map<std::pair<FittedKey, RowKind>, const FittedRow*> index_fitted(
    const std::vector<FittedRow>& fitted) {
  std::map<std::pair<FittedKey, RowKind>, const FittedRow*> index;
  for (const auto& f : fitted) {
    index[{{f.pair_id, f.exemplar}, f.kind}] = &f;
  }
  return index;
}

}  // namespace

FitReport fit_all(const Dataset& dataset, const FitStrategy& strategy,
                  const std::vector<FittedRow>* fitted, double degenerate_tolerance) {
  std::map<std::pair<FittedKey, RowKind>, const FittedRow*> index;
  if (strategy.kind == FitStrategy::Kind::FromTable) {
    if (fitted == nullptr) {
      throw Error("fit: the table strategy needs fitted parameters");
    }
    index = index_fitted(*fitted);
  }

  FitReport report;
  for_each_kind(dataset, [&](const MembershipRow& row, RowKind kind) {
    RowInputs in = row_inputs(row, kind);
    FitRecord rec;
    rec.pair_id = row.pair_id;
    rec.exemplar = row.exemplar;
    rec.kind = kind;
    rec.strategy = strategy.kind;
    rec.mu_target = in.mu_target;

    FitStrategy effective = strategy;
    const FittedRow* table_row = nullptr;
    if (strategy.kind == FitStrategy::Kind::FromTable) {
      auto it = index.find({{row.pair_id, row.exemplar}, kind});
      if (it == index.end()) {
        throw Error("fit: no fitted parameters for " + row.pair_id + "/" + row.exemplar + "/" +
                    std::string(to_string(kind)));
      }
      table_row = it->second;
      if (!table_row->in_model()) {
        // Published split outside the admissible space; report it verbatim.
        rec.status = FitStatus::Infeasible;
        rec.m2 = table_row->m2;
        rec.n2 = table_row->n2;
        report.records.push_back(std::move(rec));
        return;
      }
      effective = FitStrategy::from_table(table_row->m2);
    }

    FitResult result = fit_parameters(in.mu_a, in.mu_second, in.mu_target, effective,
                                      ConnectiveKind::Conjunction, degenerate_tolerance);
    rec.status = result.status;
    if (result.status != FitStatus::Infeasible) {
      rec.m2 = result.params.m2;
      rec.n2 = result.params.n2;
      rec.theta_deg = result.params.theta_deg;
      rec.mu_model = result.mu_model;
      rec.abs_err = std::abs(result.mu_model - in.mu_target);
    } else if (effective.kind != FitStrategy::Kind::BalancedTheta) {
      rec.m2 = effective.m2;
      rec.n2 = 1.0 - effective.m2;
    }
    report.records.push_back(std::move(rec));
  });
  return report;
}

// ---- verify ----------------------------------------------------------------

VerificationReport verify(const Dataset& dataset, const std::vector<FittedRow>& fitted,
                          double tolerance) {
  auto index = index_fitted(fitted);

  // Both key sets must line up exactly.
  std::string mismatches;
  std::map<std::pair<FittedKey, RowKind>, bool> used;
  for_each_kind(dataset, [&](const MembershipRow& row, RowKind kind) {
    auto key = std::make_pair(FittedKey{row.pair_id, row.exemplar}, kind);
    if (index.find(key) == index.end()) {
      mismatches += " -" + row.pair_id + "/" + row.exemplar + "/" +
                    std::string(to_string(kind));
    } else {
      used[key] = true;
    }
  });
  for (const auto& [key, f] : index) {
    if (!used.count(key)) {
      mismatches +=
          " +" + key.first.first + "/" + key.first.second + "/" +
          std::string(to_string(key.second));
    }
  }
  if (!mismatches.empty()) {
    throw Error("verify: unmatched rows:" + mismatches);
  }

  VerificationReport report;
  report.tolerance = tolerance;
  for_each_kind(dataset, [&](const MembershipRow& row, RowKind kind) {
    const FittedRow& f = *index.at({{row.pair_id, row.exemplar}, kind});
    RowInputs in = row_inputs(row, kind);

    VerificationRecord rec;
    rec.pair_id = row.pair_id;
    rec.exemplar = row.exemplar;
    rec.kind = kind;
    rec.mu_table = in.mu_target;
    rec.bound = attainable_range(ConnectiveKind::Conjunction, in.mu_a, in.mu_second);

    if (!f.in_model()) {
      rec.status = VerifyStatus::Infeasible;
    } else {
      FitResult result =
          fit_parameters(in.mu_a, in.mu_second, in.mu_target, FitStrategy::from_table(f.m2),
                         ConnectiveKind::Conjunction, tolerance);
      if (result.status == FitStatus::Infeasible) {
        rec.status = rec.bound.contains(in.mu_target, 1e-12) ? VerifyStatus::Degenerate
                                                             : VerifyStatus::Infeasible;
      } else {
        rec.status = VerifyStatus::Ok;
        rec.mu_model = result.mu_model;
        rec.abs_err = std::abs(result.mu_model - in.mu_target);
      }
    }
    report.records.push_back(std::move(rec));
  });

  auto& s = report.summary;
  s.rows_total = report.records.size();
  s.passed = true;
  for (const auto& rec : report.records) {
    switch (rec.status) {
      case VerifyStatus::Ok: ++s.rows_ok; break;
      case VerifyStatus::Infeasible: ++s.rows_infeasible; break;
      case VerifyStatus::Degenerate: ++s.rows_degenerate; break;
    }
    if (rec.abs_err) s.max_abs_err = std::max(s.max_abs_err, *rec.abs_err);
    if (rec.status == VerifyStatus::Degenerate ||
        (rec.abs_err && *rec.abs_err > tolerance)) {
      s.passed = false;
    }
  }
  return report;
}

// ---- rendering -------------------------------------------------------------

namespace {

void render_table(std::ostream& out, ReportFormat format,
                  const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  if (format == ReportFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << row[i];
      }
      out << '\n';
    }
    return;
  }
  // Markdown pipe table.
  out << '|';
  for (const auto& h : header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell << " |";
    out << '\n';
  }
}

}  // namespace

void render(std::ostream& out, const DiagnosticsReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : report.records) {
      arr.push_back({{"pair_id", r.pair_id},
                     {"exemplar", r.exemplar},
                     {"kind", to_string(r.kind)},
                     {"delta", r.delta},
                     {"k", r.k},
                     {"doub", r.doub},
                     {"l", json_opt(r.l)},
                     {"representable", r.representable},
                     {"violated", join_conditions(r.violated)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.records) {
    rows.push_back({r.pair_id, r.exemplar, std::string(to_string(r.kind)), fmt(r.delta),
                    fmt(r.k), fmt(r.doub), fmt_opt(r.l), bool_str(r.representable),
                    join_conditions(r.violated)});
  }
  render_table(out, format,
               {"pair_id", "exemplar", "kind", "delta", "k", "doub", "l", "representable",
                "violated"},
               rows);
}

void render(std::ostream& out, const ClassicalityReport& report, ReportFormat format) {
  auto atom_opt = [](const ClassicalityRecord& r, int i) -> std::optional<double> {
    if (!r.verdict.atoms) return std::nullopt;
    const auto& a = *r.verdict.atoms;
    const double v[] = {a.p1, a.p2, a.p3, a.p4};
    return v[i];
  };
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json item = {{"pair_id", r.pair_id},
                           {"exemplar", r.exemplar},
                           {"kind", to_string(r.kind)},
                           {"representable", r.verdict.representable},
                           {"violated", join_conditions(r.verdict.violated)}};
      if (r.verdict.atoms) {
        item["atoms"] = {r.verdict.atoms->p1, r.verdict.atoms->p2, r.verdict.atoms->p3,
                         r.verdict.atoms->p4};
      } else {
        item["atoms"] = nullptr;
      }
      arr.push_back(std::move(item));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.records) {
    rows.push_back({r.pair_id, r.exemplar, std::string(to_string(r.kind)),
                    bool_str(r.verdict.representable), join_conditions(r.verdict.violated),
                    fmt_opt(atom_opt(r, 0)), fmt_opt(atom_opt(r, 1)), fmt_opt(atom_opt(r, 2)),
                    fmt_opt(atom_opt(r, 3))});
  }
  render_table(out, format,
               {"pair_id", "exemplar", "kind", "representable", "violated", "p1", "p2", "p3",
                "p4"},
               rows);
}

void render(std::ostream& out, const FitReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : report.records) {
      arr.push_back({{"pair_id", r.pair_id},
                     {"exemplar", r.exemplar},
                     {"kind", to_string(r.kind)},
                     {"strategy", to_string(r.strategy)},
                     {"m2", json_opt(r.m2)},
                     {"n2", json_opt(r.n2)},
                     {"theta_deg", json_opt(r.theta_deg)},
                     {"mu_model", json_opt(r.mu_model)},
                     {"mu_target", r.mu_target},
                     {"abs_err", json_opt(r.abs_err)},
                     {"status", to_string(r.status)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.records) {
    rows.push_back({r.pair_id, r.exemplar, std::string(to_string(r.kind)),
                    std::string(to_string(r.strategy)), fmt_opt(r.m2), fmt_opt(r.n2),
                    fmt_opt(r.theta_deg), fmt_opt(r.mu_model), fmt(r.mu_target),
                    fmt_opt(r.abs_err), std::string(to_string(r.status))});
  }
  render_table(out, format,
               {"pair_id", "exemplar", "kind", "strategy", "m2", "n2", "theta_deg", "mu_model",
                "mu_target", "abs_err", "status"},
               rows);
}

void render(std::ostream& out, const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json item = {{"pair_id", r.pair_id},
                           {"exemplar", r.exemplar},
                           {"kind", to_string(r.kind)},
                           {"mu_table", r.mu_table},
                           {"mu_model", json_opt(r.mu_model)},
                           {"abs_err", json_opt(r.abs_err)},
                           {"status", to_string(r.status)}};
      if (r.status == VerifyStatus::Infeasible) {
        item["bound"] = {r.bound.lo, r.bound.hi};
      }
      arr.push_back(std::move(item));
    }
    ordered_json doc = {{"records", std::move(arr)},
                        {"summary",
                         {{"rows_total", report.summary.rows_total},
                          {"rows_ok", report.summary.rows_ok},
                          {"rows_infeasible", report.summary.rows_infeasible},
                          {"rows_degenerate", report.summary.rows_degenerate},
                          {"max_abs_err", report.summary.max_abs_err},
                          {"tolerance", report.tolerance},
                          {"passed", report.summary.passed}}}};
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.records) {
    bool infeasible = r.status == VerifyStatus::Infeasible;
    rows.push_back({r.pair_id, r.exemplar, std::string(to_string(r.kind)),
                    fmt(r.mu_table, 5), fmt_opt(r.mu_model), fmt_opt(r.abs_err),
                    std::string(to_string(r.status)),
                    infeasible ? fmt(r.bound.lo) : std::string(),
                    infeasible ? fmt(r.bound.hi) : std::string()});
  }
  render_table(out, format,
               {"pair_id", "exemplar", "kind", "mu_table", "mu_model", "abs_err", "status",
                "bound_lo", "bound_hi"},
               rows);
  if (format == ReportFormat::Md) {
    const auto& s = report.summary;
    out << "\nrows: " << s.rows_total << "  ok: " << s.rows_ok
        << "  infeasible: " << s.rows_infeasible << "  degenerate: " << s.rows_degenerate
        << "  max_abs_err: " << fmt(s.max_abs_err) << "  tolerance: " << fmt(report.tolerance)
        << "  passed: " << bool_str(s.passed) << '\n';
  }
}

}  // namespace fock
