#include "fock/ratings.hpp"

#include <array>
#include <istream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "csv_util.hpp"

namespace fock {

double rating_credit(int value) {
  if (!is_admissible_rating(value)) {
    throw Error("inadmissible rating value: " + std::to_string(value));
  }
  if (value > 0) return 1.0;
  if (value == 0) return 0.5;
  return 0.0;
}

MembershipWeight ratings_to_weight(std::span<const int> values) {
  if (values.empty()) {
    throw Error("ratings_to_weight: empty rating list");
  }
  double total = 0.0;
  for (int v : values) total += rating_credit(v);
  return MembershipWeight(total / static_cast<double>(values.size()));
}

MembershipWeight ratings_to_weight(std::span<const Rating> ratings) {
  std::vector<int> values;
  values.reserve(ratings.size());
  for (const auto& r : ratings) values.push_back(r.value);
  return ratings_to_weight(values);
}

std::vector<Rating> parse_ratings(std::istream& in) {
  static const std::vector<std::string> kHeader = {"participant_id", "pair_id", "exemplar",
                                                   "concept_label", "rating"};
  CsvReader reader(in, kHeader);
  std::vector<Rating> out;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    Rating r;
    r.participant_id = fields[0];
    r.pair_id = fields[1];
    r.exemplar = fields[2];
    auto label = parse_concept_label(fields[3]);
    if (!label) {
      throw ParseError(reader.line(), "unknown concept label '" + fields[3] + "'");
    }
    r.concept_label = *label;
    int value = 0;
    if (!parse_int(fields[4], value)) {
      throw ParseError(reader.line(), "malformed rating '" + fields[4] + "'");
    }
    if (!is_admissible_rating(value)) {
      throw ParseError(reader.line(), "rating out of range: " + fields[4]);
    }
    r.value = value;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct GroupKey {
  std::string pair_id;
  std::string exemplar;

  bool operator<(const GroupKey& o) const {
    return pair_id != o.pair_id ? pair_id < o.pair_id : exemplar < o.exemplar;
  }
};

}  // namespace

Dataset aggregate(const std::vector<Rating>& ratings) {
  if (ratings.empty()) {
    throw Error("aggregate: no ratings");
  }
  // Per-group rating values, cells indexed by concept label.
  std::map<GroupKey, std::array<std::vector<int>, 5>> groups;
  std::vector<GroupKey> order;
  for (const auto& r : ratings) {
    GroupKey key{r.pair_id, r.exemplar};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second[static_cast<std::size_t>(r.concept_label)].push_back(r.value);
  }

  Dataset ds;
  std::vector<std::string> pair_seen;
  for (const auto& key : order) {
    const auto& cells = groups[key];
    auto weight_of = [&](ConceptLabel label) -> std::optional<MembershipWeight> {
      const auto& vals = cells[static_cast<std::size_t>(label)];
      if (vals.empty()) return std::nullopt;
      return ratings_to_weight(vals);
    };

    MembershipRow row;
    row.pair_id = key.pair_id;
    row.exemplar = key.exemplar;
    auto mu_a = weight_of(ConceptLabel::A);
    auto mu_b = weight_of(ConceptLabel::B);
    if (!mu_a || !mu_b) {
      throw Error("aggregate: " + key.pair_id + "/" + key.exemplar +
                  " lacks ratings for concept A or B");
    }
    row.mu_a = *mu_a;
    row.mu_b = *mu_b;
    row.mu_not_b = weight_of(ConceptLabel::NotB);
    row.mu_a_and_b = weight_of(ConceptLabel::AandB);
    row.mu_a_and_not_b = weight_of(ConceptLabel::AandNotB);
    if (!row.mu_a_and_b && !row.mu_a_and_not_b) {
      throw Error("aggregate: " + key.pair_id + "/" + key.exemplar +
                  " has no combination ratings (MissingCombination)");
    }
    row.validate();
    ds.rows.push_back(std::move(row));

    bool known = false;
    for (const auto& p : pair_seen) known = known || p == key.pair_id;
    if (!known) {
      pair_seen.push_back(key.pair_id);
      ds.pairs.push_back({key.pair_id, "", ""});
    }
  }
  return ds;
}

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps simulated ratings
// identical across standard library implementations.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Rating> simulate_ratings(const MembershipRow& row, int participants_per_concept,
                                     std::uint64_t seed) {
  if (participants_per_concept < 1) {
    throw Error("simulate_ratings: participants_per_concept must be >= 1");
  }
  row.validate();
  std::mt19937_64 rng(seed);
  std::vector<Rating> out;

  auto emit = [&](ConceptLabel label, const std::optional<MembershipWeight>& mu) {
    if (!mu) return;
    for (int i = 0; i < participants_per_concept; ++i) {
      Rating r;
      r.participant_id = "p" + std::to_string(i + 1);
      r.pair_id = row.pair_id;
      r.exemplar = row.exemplar;
      r.concept_label = label;
      r.value = next_uniform(rng) < mu->value() ? 3 : -3;
      out.push_back(std::move(r));
    }
  };

  emit(ConceptLabel::A, std::make_optional(row.mu_a));
  emit(ConceptLabel::B, std::make_optional(row.mu_b));
  emit(ConceptLabel::NotB, row.mu_not_b);
  emit(ConceptLabel::AandB, row.mu_a_and_b);
  emit(ConceptLabel::AandNotB, row.mu_a_and_not_b);
  return out;
}

}  // namespace fock
