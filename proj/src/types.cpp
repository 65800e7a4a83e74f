#include "fock/types.hpp"

#include <cmath>

namespace fock {

MembershipWeight::MembershipWeight(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw Error("membership weight outside [0,1]: " + std::to_string(value));
  }
}

std::string_view to_string(ConceptLabel label) {
  switch (label) {
    case ConceptLabel::A: return "A";
    case ConceptLabel::B: return "B";
    case ConceptLabel::NotB: return "NotB";
    case ConceptLabel::AandB: return "AandB";
    case ConceptLabel::AandNotB: return "AandNotB";
  }
  return "?";
}

std::optional<ConceptLabel> parse_concept_label(std::string_view text) {
  if (text == "A") return ConceptLabel::A;
  if (text == "B") return ConceptLabel::B;
  if (text == "NotB") return ConceptLabel::NotB;
  if (text == "AandB") return ConceptLabel::AandB;
  if (text == "AandNotB") return ConceptLabel::AandNotB;
  return std::nullopt;
}

bool is_admissible_rating(int value) { return value >= -3 && value <= 3; }

std::string_view to_string(RowKind kind) {
  return kind == RowKind::Conjunction ? "conjunction" : "negation";
}

std::optional<RowKind> parse_row_kind(std::string_view text) {
  if (text == "conjunction") return RowKind::Conjunction;
  if (text == "negation") return RowKind::ConjunctionNegation;
  return std::nullopt;
}

void MembershipRow::validate() const {
  if (!mu_a_and_b && !mu_a_and_not_b) {
    throw Error("row " + pair_id + "/" + exemplar +
                ": needs at least one of mu_AandB / mu_AandNotB");
  }
  if (mu_a_and_not_b && !mu_not_b) {
    throw Error("row " + pair_id + "/" + exemplar + ": mu_AandNotB requires mu_notB");
  }
}

bool MembershipRow::has_kind(RowKind kind) const {
  return kind == RowKind::Conjunction ? mu_a_and_b.has_value() : mu_a_and_not_b.has_value();
}

const MembershipRow* Dataset::find(std::string_view pair_id, std::string_view exemplar) const {
  for (const auto& row : rows) {
    if (row.pair_id == pair_id && row.exemplar == exemplar) return &row;
  }
  return nullptr;
}

void Dataset::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].validate();
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].pair_id == rows[j].pair_id && rows[i].exemplar == rows[j].exemplar) {
        throw Error("duplicate row: " + rows[i].pair_id + "/" + rows[i].exemplar);
      }
    }
  }
}

bool FittedRow::in_model() const {
  return m2 >= 0.0 && m2 <= 1.0 && n2 >= 0.0 && n2 <= 1.0 && std::abs(m2 + n2 - 1.0) <= 0.01;
}

}  // namespace fock
