#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fock/types.hpp"

namespace fock {

// Credit assigned to a single 7-point rating: positive answers count as
// full membership, the neutral 0 as half, negative answers as none.
double rating_credit(int value);

// Mean credit over one (exemplar, concept) group of ratings.
// Throws Error on an empty list or an inadmissible value.
MembershipWeight ratings_to_weight(std::span<const int> values);
MembershipWeight ratings_to_weight(std::span<const Rating> ratings);

// Reads the ratings CSV (header `participant_id,pair_id,exemplar,
// concept_label,rating`). Order preserved. Throws ParseError.
std::vector<Rating> parse_ratings(std::istream& in);

// Groups ratings by (pair_id, exemplar, concept_label) and averages them
// into membership rows. Row order follows first appearance in the input.
// Throws Error when an exemplar lacks both conjunction columns or pairs
// a negated conjunction with no negation marginal.
Dataset aggregate(const std::vector<Rating>& ratings);

// Draws synthetic ratings whose expected aggregate equals the source row:
// each present weight mu yields participants_per_concept ratings of +3
// with probability mu and -3 otherwise. Deterministic for a given seed.
std::vector<Rating> simulate_ratings(const MembershipRow& row, int participants_per_concept,
                                     std::uint64_t seed);

}  // namespace fock
