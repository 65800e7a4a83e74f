#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "fock/types.hpp"

namespace fock {

// Weights CSV: `pair_id,exemplar,mu_A,mu_B,mu_notB,mu_AandB,mu_AandNotB`.
// Empty field = absent column.
Dataset read_weights_csv(std::istream& in);
void write_weights_csv(std::ostream& out, const Dataset& dataset);

// Fitted-parameters CSV:
// `pair_id,exemplar,kind,theta_deg,m2,n2,a1,a2,a3,b1,b2,b3`.
std::vector<FittedRow> read_fitted_csv(std::istream& in);
void write_fitted_csv(std::ostream& out, std::span<const FittedRow> rows);

// Ratings CSV: `participant_id,pair_id,exemplar,concept_label,rating`.
// (The reader is parse_ratings in ratings.hpp.)
void write_ratings_csv(std::ostream& out, std::span<const Rating> ratings);

}  // namespace fock
