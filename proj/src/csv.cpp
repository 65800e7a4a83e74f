#include "fock/csv.hpp"

#include <ostream>

#include "csv_util.hpp"

namespace fock {

namespace {

std::optional<MembershipWeight> optional_weight(const std::string& field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  if (!parse_double(field, v)) {
    throw ParseError(line, "malformed weight '" + field + "'");
  }
  try {
    return MembershipWeight(v);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

std::string weight_field(const std::optional<MembershipWeight>& w) {
  return w ? format_fixed(w->value(), 5) : std::string();
}

}  // namespace

Dataset read_weights_csv(std::istream& in) {
  static const std::vector<std::string> kHeader = {"pair_id", "exemplar",  "mu_A",       "mu_B",
                                                   "mu_notB", "mu_AandB", "mu_AandNotB"};
  CsvReader reader(in, kHeader);
  Dataset ds;
  std::vector<std::string> pair_seen;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    MembershipRow row;
    row.pair_id = fields[0];
    row.exemplar = fields[1];
    auto mu_a = optional_weight(fields[2], reader.line());
    auto mu_b = optional_weight(fields[3], reader.line());
    if (!mu_a || !mu_b) {
      throw ParseError(reader.line(), "mu_A and mu_B are required");
    }
    row.mu_a = *mu_a;
    row.mu_b = *mu_b;
    row.mu_not_b = optional_weight(fields[4], reader.line());
    row.mu_a_and_b = optional_weight(fields[5], reader.line());
    row.mu_a_and_not_b = optional_weight(fields[6], reader.line());
    try {
      row.validate();
    } catch (const Error& e) {
      throw ParseError(reader.line(), e.what());
    }
    ds.rows.push_back(std::move(row));

    bool known = false;
    for (const auto& p : pair_seen) known = known || p == ds.rows.back().pair_id;
    if (!known) {
      pair_seen.push_back(ds.rows.back().pair_id);
      ds.pairs.push_back({ds.rows.back().pair_id, "", ""});
    }
  }
  ds.validate();
  return ds;
}

void write_weights_csv(std::ostream& out, const Dataset& dataset) {
  out << "pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB\n";
  for (const auto& row : dataset.rows) {
    out << row.pair_id << ',' << row.exemplar << ',' << format_fixed(row.mu_a.value(), 5) << ','
        << format_fixed(row.mu_b.value(), 5) << ',' << weight_field(row.mu_not_b) << ','
        << weight_field(row.mu_a_and_b) << ',' << weight_field(row.mu_a_and_not_b) << '\n';
  }
}

std::vector<FittedRow> read_fitted_csv(std::istream& in) {
  static const std::vector<std::string> kHeader = {"pair_id", "exemplar", "kind", "theta_deg",
                                                   "m2",      "n2",       "a1",   "a2",
                                                   "a3",      "b1",       "b2",   "b3"};
  CsvReader reader(in, kHeader);
  std::vector<FittedRow> out;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    FittedRow row;
    row.pair_id = fields[0];
    row.exemplar = fields[1];
    auto kind = parse_row_kind(fields[2]);
    if (!kind) {
      throw ParseError(reader.line(), "unknown kind '" + fields[2] + "'");
    }
    row.kind = *kind;
    double values[9];
    for (int i = 0; i < 9; ++i) {
      if (!parse_double(fields[static_cast<std::size_t>(3 + i)], values[i])) {
        throw ParseError(reader.line(),
                         "malformed number '" + fields[static_cast<std::size_t>(3 + i)] + "'");
      }
    }
    row.theta_deg = values[0];
    row.m2 = values[1];
    row.n2 = values[2];
    row.vec_a = {values[3], values[4], values[5]};
    row.vec_b = {values[6], values[7], values[8]};
    out.push_back(std::move(row));
  }
  return out;
}

void write_fitted_csv(std::ostream& out, std::span<const FittedRow> rows) {
  out << "pair_id,exemplar,kind,theta_deg,m2,n2,a1,a2,a3,b1,b2,b3\n";
  for (const auto& row : rows) {
    out << row.pair_id << ',' << row.exemplar << ',' << to_string(row.kind) << ','
        << format_fixed(row.theta_deg, 5) << ',' << format_fixed(row.m2, 5) << ','
        << format_fixed(row.n2, 5);
    for (double v : row.vec_a) out << ',' << format_fixed(v, 5);
    for (double v : row.vec_b) out << ',' << format_fixed(v, 5);
    out << '\n';
  }
}

void write_ratings_csv(std::ostream& out, std::span<const Rating> ratings) {
  out << "participant_id,pair_id,exemplar,concept_label,rating\n";
  for (const auto& r : ratings) {
    out << r.participant_id << ',' << r.pair_id << ',' << r.exemplar << ','
        << to_string(r.concept_label) << ',' << r.value << '\n';
  }
}

}  // namespace fock
