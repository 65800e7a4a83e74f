#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

// A membership weight: the fraction of respondents judging an exemplar a
// member of a concept. Always inside [0,1].
class MembershipWeight {
 public:
  MembershipWeight() = default;
  explicit MembershipWeight(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// The five rated statements per exemplar.
enum class ConceptLabel { A, B, NotB, AandB, AandNotB };

std::string_view to_string(ConceptLabel label);
std::optional<ConceptLabel> parse_concept_label(std::string_view text);

// One participant's 7-point judgement for one (exemplar, concept) cell.
struct Rating {
  std::string participant_id;
  std::string pair_id;
  std::string exemplar;
  ConceptLabel concept_label = ConceptLabel::A;
  int value = 0;  // in {-3..+3}
};

bool is_admissible_rating(int value);

// Which combination experiment a record belongs to: the plain conjunction
// "A and B", or the conjunction with negated second concept "A and not B".
enum class RowKind { Conjunction, ConjunctionNegation };

std::string_view to_string(RowKind kind);
std::optional<RowKind> parse_row_kind(std::string_view text);

// Measured weights for one exemplar of one concept pair. The negation
// columns are optional: conjunction-only inputs leave them empty, but
// mu_not_b must accompany mu_a_and_not_b.
struct MembershipRow {
  std::string pair_id;
  std::string exemplar;
  MembershipWeight mu_a;
  MembershipWeight mu_b;
  std::optional<MembershipWeight> mu_not_b;
  std::optional<MembershipWeight> mu_a_and_b;
  std::optional<MembershipWeight> mu_a_and_not_b;

  // Throws Error when the optional-column rules are broken.
  void validate() const;

  bool has_kind(RowKind kind) const;
};

struct ConceptPair {
  std::string pair_id;
  std::string concept_a;
  std::string concept_b;
};

// An ordered collection of membership rows; (pair_id, exemplar) is unique.
struct Dataset {
  std::vector<ConceptPair> pairs;
  std::vector<MembershipRow> rows;

  const MembershipRow* find(std::string_view pair_id, std::string_view exemplar) const;
  // Throws Error on duplicate (pair_id, exemplar) or an invalid row.
  void validate() const;
};

// Fitted two-sector parameters and concept vectors for one row of one
// experiment, as published. A few published rows carry out-of-range sector
// weights; they are stored as-is and reported by in_model().
struct FittedRow {
  std::string pair_id;
  std::string exemplar;
  RowKind kind = RowKind::Conjunction;
  double theta_deg = 0.0;
  double m2 = 0.0;
  double n2 = 0.0;
  std::array<double, 3> vec_a{};  // concept A, all components real
  std::array<double, 3> vec_b{};  // second concept with the global phase stripped

  bool in_model() const;
};

}  // namespace fock
