#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fock/bundled.hpp"
#include "fock/csv.hpp"

using namespace fock;

namespace {

std::string data_path(const char* name) { return std::string(FOCK_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("bundled dataset shape") {
  const Dataset& ds = bundled_dataset();
  REQUIRE(ds.pairs.size() == 4);
  REQUIRE(ds.rows.size() == 96);
  ds.validate();

  for (const auto& pair : ds.pairs) {
    int count = 0;
    for (const auto& row : ds.rows) count += row.pair_id == pair.pair_id ? 1 : 0;
    CHECK(count == 24);
  }
  for (const auto& row : ds.rows) {
    CHECK(row.mu_not_b.has_value());
    CHECK(row.mu_a_and_b.has_value());
    CHECK(row.mu_a_and_not_b.has_value());
  }
}

TEST_CASE("bundled weights are multiples of 1/160") {
  for (const auto& row : bundled_dataset().rows) {
    for (double v : {row.mu_a.value(), row.mu_b.value(), row.mu_not_b->value(),
                     row.mu_a_and_b->value(), row.mu_a_and_not_b->value()}) {
      double scaled = v * 160.0;
      CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);
    }
  }
}

TEST_CASE("bundled spot cells") {
  const Dataset& ds = bundled_dataset();
  const MembershipRow* pepper = ds.find("pair2", "Pepper");
  REQUIRE(pepper != nullptr);
  CHECK(pepper->mu_a.value() == 0.99375);
  CHECK(pepper->mu_not_b->value() == 0.58125);
  CHECK(pepper->mu_a_and_not_b->value() == 0.9);

  const MembershipRow* rug = ds.find("pair1", "Rug");
  REQUIRE(rug != nullptr);
  CHECK(rug->mu_b.value() == 0.575);
  CHECK(rug->mu_not_b->value() == 0.60625);

  const MembershipRow* olive = ds.find("pair4", "Olive");
  REQUIRE(olive != nullptr);
  CHECK(olive->mu_a.value() == 0.53125);
  CHECK(olive->mu_b.value() == 0.63125);
  CHECK(olive->mu_a_and_b->value() == 0.65);

  CHECK(ds.pairs[0].concept_a == "Home Furnishing");
  CHECK(ds.pairs[3].concept_b == "Vegetables");
}

TEST_CASE("bundled fitted parameters") {
  const auto& fitted = bundled_fitted();
  REQUIRE(fitted.size() == 192);

  // Exactly two published rows carry out-of-range sector weights.
  std::vector<std::string> out_of_model;
  for (const auto& f : fitted) {
    if (!f.in_model()) {
      out_of_model.push_back(f.pair_id + "/" + f.exemplar + "/" + std::string(to_string(f.kind)));
    }
  }
  REQUIRE(out_of_model.size() == 2);
  CHECK(out_of_model[0] == "pair2/Chili Pepper/negation");
  CHECK(out_of_model[1] == "pair4/Broccoli/conjunction");

  // Spot row: the Fruits/Vegetables Olive conjunction fit.
  bool found = false;
  for (const auto& f : fitted) {
    if (f.pair_id == "pair4" && f.exemplar == "Olive" && f.kind == RowKind::Conjunction) {
      found = true;
      CHECK(f.theta_deg == 60.48);
      CHECK(f.m2 == 0.3);
      CHECK(f.n2 == 0.7);
      CHECK(f.vec_b[2] == -0.61);
    }
  }
  CHECK(found);
}

TEST_CASE("shipped weights csv equals the bundled dataset") {
  std::ifstream in(data_path("weights.csv"));
  REQUIRE(in.good());
  Dataset ds = read_weights_csv(in);
  const Dataset& ref = bundled_dataset();
  REQUIRE(ds.rows.size() == ref.rows.size());
  for (std::size_t i = 0; i < ds.rows.size(); ++i) {
    CHECK(ds.rows[i].pair_id == ref.rows[i].pair_id);
    CHECK(ds.rows[i].exemplar == ref.rows[i].exemplar);
    CHECK(ds.rows[i].mu_a.value() == doctest::Approx(ref.rows[i].mu_a.value()).epsilon(1e-12));
    CHECK(ds.rows[i].mu_b.value() == doctest::Approx(ref.rows[i].mu_b.value()).epsilon(1e-12));
    CHECK(ds.rows[i].mu_not_b->value() ==
          doctest::Approx(ref.rows[i].mu_not_b->value()).epsilon(1e-12));
    CHECK(ds.rows[i].mu_a_and_b->value() ==
          doctest::Approx(ref.rows[i].mu_a_and_b->value()).epsilon(1e-12));
    CHECK(ds.rows[i].mu_a_and_not_b->value() ==
          doctest::Approx(ref.rows[i].mu_a_and_not_b->value()).epsilon(1e-12));
  }
}

TEST_CASE("shipped fitted csv equals the bundled table") {
  std::ifstream in(data_path("fitted.csv"));
  REQUIRE(in.good());
  auto rows = read_fitted_csv(in);
  const auto& ref = bundled_fitted();
  REQUIRE(rows.size() == ref.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].pair_id == ref[i].pair_id);
    CHECK(rows[i].exemplar == ref[i].exemplar);
    CHECK(rows[i].kind == ref[i].kind);
    CHECK(rows[i].theta_deg == doctest::Approx(ref[i].theta_deg).epsilon(1e-12));
    CHECK(rows[i].m2 == doctest::Approx(ref[i].m2).epsilon(1e-12));
    for (int c = 0; c < 3; ++c) {
      CHECK(rows[i].vec_a[static_cast<std::size_t>(c)] ==
            doctest::Approx(ref[i].vec_a[static_cast<std::size_t>(c)]).epsilon(1e-12));
      CHECK(rows[i].vec_b[static_cast<std::size_t>(c)] ==
            doctest::Approx(ref[i].vec_b[static_cast<std::size_t>(c)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("weights csv round trip is byte-stable") {
  std::ostringstream first;
  write_weights_csv(first, bundled_dataset());
  std::istringstream back(first.str());
  Dataset again = read_weights_csv(back);
  std::ostringstream second;
  write_weights_csv(second, again);
  CHECK(first.str() == second.str());
}

TEST_CASE("fitted csv round trip is byte-stable") {
  std::ostringstream first;
  write_fitted_csv(first, bundled_fitted());
  std::istringstream back(first.str());
  auto again = read_fitted_csv(back);
  std::ostringstream second;
  write_fitted_csv(second, again);
  CHECK(first.str() == second.str());
}

TEST_CASE("weights csv validation") {
  SUBCASE("empty optional columns are allowed") {
    std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n"
                          "p,X,0.5,0.5,,0.4,\n");
    Dataset ds = read_weights_csv(in);
    REQUIRE(ds.rows.size() == 1);
    CHECK(!ds.rows[0].mu_not_b.has_value());
    CHECK(ds.rows[0].mu_a_and_b->value() == 0.4);
  }
  SUBCASE("negated conjunction requires the negation marginal") {
    std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n"
                          "p,X,0.5,0.5,,,0.4\n");
    CHECK_THROWS_AS(read_weights_csv(in), ParseError);
  }
  SUBCASE("weight out of range") {
    std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n"
                          "p,X,1.5,0.5,,0.4,\n");
    CHECK_THROWS_AS(read_weights_csv(in), ParseError);
  }
  SUBCASE("header only gives an empty dataset") {
    std::istringstream in("pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n");
    Dataset ds = read_weights_csv(in);
    CHECK(ds.rows.empty());
  }
}
