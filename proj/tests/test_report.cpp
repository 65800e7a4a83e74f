#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fock/bundled.hpp"
#include "fock/csv.hpp"
#include "fock/ratings.hpp"
#include "fock/report.hpp"

using namespace fock;

namespace {

const DiagnosticsRecord* find_record(const DiagnosticsReport& report, const char* pair,
                                     const char* exemplar, RowKind kind) {
  for (const auto& r : report.records) {
    if (r.pair_id == pair && r.exemplar == exemplar && r.kind == kind) return &r;
  }
  return nullptr;
}

const VerificationRecord* find_record(const VerificationReport& report, const char* pair,
                                      const char* exemplar, RowKind kind) {
  for (const auto& r : report.records) {
    if (r.pair_id == pair && r.exemplar == exemplar && r.kind == kind) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("diagnose covers both kinds in row order") {
  auto report = diagnose(bundled_dataset());
  REQUIRE(report.records.size() == 192);
  CHECK(report.records[0].kind == RowKind::Conjunction);
  CHECK(report.records[1].kind == RowKind::ConjunctionNegation);
  CHECK(report.records[0].exemplar == "Mantelpiece");

  const auto* bull = find_record(report, "pair3", "Prize Bull", RowKind::Conjunction);
  REQUIRE(bull != nullptr);
  CHECK(bull->delta == doctest::Approx(0.29375).epsilon(1e-12));

  const auto* rug = find_record(report, "pair1", "Rug", RowKind::ConjunctionNegation);
  REQUIRE(rug != nullptr);
  REQUIRE(rug->l.has_value());
  CHECK(*rug->l == doctest::Approx(-0.18125).epsilon(1e-12));
  CHECK(!find_record(report, "pair1", "Rug", RowKind::Conjunction)->l.has_value());
}

TEST_CASE("diagnose on an empty dataset is empty") {
  std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n");
  auto report = diagnose(read_weights_csv(in));
  CHECK(report.records.empty());
}

TEST_CASE("kolmogorov report") {
  auto report = kolmogorov_check(bundled_dataset());
  REQUIRE(report.records.size() == 192);

  std::size_t conj_representable = 0, neg_representable = 0;
  for (const auto& r : report.records) {
    if (!r.verdict.representable) continue;
    (r.kind == RowKind::Conjunction ? conj_representable : neg_representable) += 1;
  }
  CHECK(conj_representable == 14);
  CHECK(neg_representable == 1);

  for (const auto& r : report.records) {
    if (r.pair_id == "pair1" && r.exemplar == "Window Seat" && r.kind == RowKind::Conjunction) {
      REQUIRE(r.verdict.representable);
      CHECK(r.verdict.atoms->p1 == doctest::Approx(0.45).epsilon(1e-12));
      CHECK(r.verdict.atoms->p3 == doctest::Approx(0.03125).epsilon(1e-12));
    }
    if (r.pair_id == "pair4" && r.exemplar == "Elderberry" &&
        r.kind == RowKind::ConjunctionNegation) {
      CHECK(r.verdict.representable);
    }
    if (r.pair_id == "pair2" && r.exemplar == "Chili Pepper" && r.kind == RowKind::Conjunction) {
      REQUIRE(r.verdict.violated.size() == 1);
      CHECK(r.verdict.violated[0] == Condition::Ineq02);
    }
  }
}

TEST_CASE("verify reproduces the bundled tables") {
  auto report = verify(bundled_dataset(), bundled_fitted(), 0.02);
  const auto& s = report.summary;
  CHECK(s.rows_total == 192);
  CHECK(s.rows_ok == 188);
  CHECK(s.rows_infeasible == 4);
  CHECK(s.rows_degenerate == 0);
  CHECK(s.rows_total == s.rows_ok + s.rows_infeasible + s.rows_degenerate);
  CHECK(s.passed);
  CHECK(s.max_abs_err <= 0.02);
  CHECK(s.max_abs_err > 0.0);  // the arbitrary-angle rows leave a small residual

  std::vector<std::string> infeasible;
  for (const auto& r : report.records) {
    if (r.status == VerifyStatus::Infeasible) {
      infeasible.push_back(r.pair_id + "/" + r.exemplar + "/" + std::string(to_string(r.kind)));
    }
  }
  REQUIRE(infeasible.size() == 4);
  CHECK(infeasible[0] == "pair2/Chili Pepper/negation");
  CHECK(infeasible[1] == "pair2/Cinnamon/negation");
  CHECK(infeasible[2] == "pair2/Pepper/negation");
  CHECK(infeasible[3] == "pair4/Broccoli/conjunction");

  const auto* olive = find_record(report, "pair4", "Olive", RowKind::Conjunction);
  REQUIRE(olive != nullptr);
  REQUIRE(olive->mu_model.has_value());
  CHECK(std::abs(*olive->mu_model - 0.65) <= 0.01);

  const auto* goldfish = find_record(report, "pair3", "Goldfish", RowKind::Conjunction);
  REQUIRE(goldfish != nullptr);
  CHECK(std::abs(*goldfish->mu_model - 0.425) <= 0.01);

  const auto* bull = find_record(report, "pair3", "Prize Bull", RowKind::ConjunctionNegation);
  REQUIRE(bull != nullptr);
  CHECK(std::abs(*bull->mu_model - 0.275) <= 0.01);

  // Pepper's bound shows how far the model can reach at best.
  const auto* pepper = find_record(report, "pair2", "Pepper", RowKind::ConjunctionNegation);
  REQUIRE(pepper != nullptr);
  CHECK(pepper->bound.hi == doctest::Approx(0.8386584548242028).epsilon(1e-9));
}

TEST_CASE("verify at zero tolerance fails") {
  auto report = verify(bundled_dataset(), bundled_fitted(), 0.0);
  CHECK(!report.summary.passed);
}

TEST_CASE("verify rejects mismatched key sets") {
  auto fitted = bundled_fitted();
  fitted.pop_back();
  CHECK_THROWS_AS(verify(bundled_dataset(), fitted, 0.02), Error);
}

TEST_CASE("fit with the table strategy matches the verify pass set") {
  auto fitted = bundled_fitted();
  auto fit_report = fit_all(bundled_dataset(), FitStrategy::from_table(0.0), &fitted, 0.02);
  auto verify_report = verify(bundled_dataset(), fitted, 0.02);
  REQUIRE(fit_report.records.size() == verify_report.records.size());
  for (std::size_t i = 0; i < fit_report.records.size(); ++i) {
    bool fit_pass = fit_report.records[i].status != FitStatus::Infeasible;
    bool verify_pass = verify_report.records[i].status != VerifyStatus::Infeasible;
    CHECK(fit_pass == verify_pass);
  }
}

TEST_CASE("fit strategies on single rows") {
  // One-row dataset around the Pepper negated conjunction.
  std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n"
                        "pair2,Pepper,0.99375,0.46875,0.58125,,0.9\n");
  Dataset ds = read_weights_csv(in);

  auto fixed = fit_all(ds, FitStrategy::fixed_m2(0.0));
  REQUIRE(fixed.records.size() == 1);
  CHECK(fixed.records[0].status == FitStatus::Infeasible);

  auto balanced = fit_all(ds, FitStrategy::balanced_theta());
  CHECK(balanced.records[0].status == FitStatus::Infeasible);

  // A target between the sector values solves at exactly 90 degrees.
  std::istringstream in2("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n"
                         "p,X,0.5,0.48125,,0.365625,\n");
  auto mid = fit_all(read_weights_csv(in2), FitStrategy::balanced_theta());
  REQUIRE(mid.records.size() == 1);
  REQUIRE(mid.records[0].status == FitStatus::Ok);
  CHECK(*mid.records[0].theta_deg == 90.0);
  CHECK(*mid.records[0].m2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("renderers are deterministic and well-formed") {
  auto diag = diagnose(bundled_dataset());
  auto kolm = kolmogorov_check(bundled_dataset());
  auto ver = verify(bundled_dataset(), bundled_fitted(), 0.02);

  for (ReportFormat format : {ReportFormat::Csv, ReportFormat::Md, ReportFormat::Json}) {
    std::ostringstream a, b;
    render(a, diag, format);
    render(b, diag, format);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
  }

  std::ostringstream csv;
  render(csv, diag, ReportFormat::Csv);
  CHECK(csv.str().rfind("pair_id,exemplar,kind,delta,k,doub,l,representable,violated\n", 0) ==
        0);
  std::ostringstream md;
  render(md, diag, ReportFormat::Md);
  CHECK(md.str().rfind("| pair_id |", 0) == 0);

  std::ostringstream js;
  render(js, ver, ReportFormat::Json);
  auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["summary"]["rows_total"] == 192);
  CHECK(doc["summary"]["passed"] == true);

  std::ostringstream kcsv;
  render(kcsv, kolm, ReportFormat::Csv);
  CHECK(kcsv.str().rfind("pair_id,exemplar,kind,representable,violated,p1,p2,p3,p4\n", 0) == 0);
}

TEST_CASE("ingest round trip through simulated ratings") {
  // Simulate a small two-row dataset, aggregate it back, compare weights.
  Dataset source;
  source.pairs.push_back({"pa", "", ""});
  MembershipRow r1;
  r1.pair_id = "pa";
  r1.exemplar = "One";
  r1.mu_a = MembershipWeight(0.7);
  r1.mu_b = MembershipWeight(0.3);
  r1.mu_a_and_b = MembershipWeight(0.4);
  MembershipRow r2;
  r2.pair_id = "pa";
  r2.exemplar = "Two";
  r2.mu_a = MembershipWeight(1.0);
  r2.mu_b = MembershipWeight(1.0);
  r2.mu_a_and_b = MembershipWeight(1.0);
  source.rows = {r1, r2};

  std::vector<Rating> all;
  for (std::size_t i = 0; i < source.rows.size(); ++i) {
    auto part = simulate_ratings(source.rows[i], 20000, 100 + i);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::ostringstream csv;
  write_ratings_csv(csv, all);
  std::istringstream back(csv.str());
  Dataset ds = aggregate(parse_ratings(back));
  REQUIRE(ds.rows.size() == 2);
  CHECK(std::abs(ds.rows[0].mu_a.value() - 0.7) <= 0.02);
  CHECK(std::abs(ds.rows[0].mu_a_and_b->value() - 0.4) <= 0.02);
  CHECK(ds.rows[1].mu_a.value() == 1.0);
  CHECK(ds.rows[1].mu_a_and_b->value() == 1.0);
}
