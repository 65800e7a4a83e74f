#pragma once

#include <vector>

#include "fock/types.hpp"

namespace fock {

// The reference survey dataset shipped with the library: four concept
// pairs, 24 exemplars each, conjunction and negated-conjunction weights.
const Dataset& bundled_dataset();

// Published fitted parameters (theta, m2, n2) and concept vectors for
// every bundled row, both experiment kinds.
const std::vector<FittedRow>& bundled_fitted();

}  // namespace fock
