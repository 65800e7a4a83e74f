#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fock/types.hpp"

namespace fock {

// Classicality indicators for a conjunction measurement.
//   delta = mu(A and B) - min(muA, muB)       (minimum-rule deviation; > 0 is overextension)
//   k     = 1 - muA - muB + mu(A and B)       (classical conjunction factor; < 0 is non-classical)
//   doub  = max(muA, muB) - mu(A and B)       (< 0 is double overextension)
struct ConjunctionDiagnostics {
  double delta = 0.0;
  double k = 0.0;
  double doub = 0.0;
};

// Same indicators with the negated second concept, plus the complement
// defect l = 1 - muB - mu(not B); any nonzero l is non-classical negation.
struct NegationDiagnostics {
  double delta = 0.0;
  double k = 0.0;
  double doub = 0.0;
  double l = 0.0;
};

// Measures of the four atoms of the explicit probability space over
// {1,2,3,4} with events E_A = {1,2} and E_second = {1,3}.
struct KolmogorovAtoms {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;

  double sum() const { return p1 + p2 + p3 + p4; }
  bool nonnegative(double tolerance = 0.0) const;
};

// The individual representability conditions, reported per row:
//   Ineq01  mu(A and B)      <= muA          Ineq04  mu(A and not B) <= muA
//   Ineq02  mu(A and B)      <= muB          Ineq05  mu(A and not B) <= mu(not B)
//   Ineq03  muA + muB        - mu(A and B)      <= 1
//   Ineq06  muA + mu(not B)  - mu(A and not B)  <= 1
//   Eq07    1 - muB - mu(not B) = 0
enum class Condition { Ineq01, Ineq02, Ineq03, Ineq04, Ineq05, Ineq06, Eq07 };

std::string_view to_string(Condition c);

struct ClassicalityVerdict {
  bool representable = false;
  std::vector<Condition> violated;                // empty iff representable
  std::optional<KolmogorovAtoms> atoms;           // present iff representable
};

ConjunctionDiagnostics conjunction_diagnostics(double mu_a, double mu_b, double mu_a_and_b);
NegationDiagnostics negation_diagnostics(double mu_a, double mu_b, double mu_not_b,
                                         double mu_a_and_not_b);

// The raw four-atom construction p = (mu_and, muA - mu_and,
// mu_second - mu_and, 1 - muA - mu_second + mu_and). Sums to one for any
// inputs; atoms go negative exactly when the data is non-classical.
KolmogorovAtoms atom_construction(double mu_a, double mu_second, double mu_and);

// Checked constructions: throw NegativeAtomError when an atom is negative.
KolmogorovAtoms construct_atoms_conjunction(double mu_a, double mu_b, double mu_a_and_b);
KolmogorovAtoms construct_atoms_negation(double mu_a, double mu_not_b, double mu_a_and_not_b);

// Classical representability of (muA, muB, mu(A and B)): the conjunction
// weight may exceed neither marginal and the union bound must hold.
// Inclusive comparisons; boundary data is representable.
ClassicalityVerdict check_conjunction_representability(double mu_a, double mu_b, double mu_a_and_b);

// Classical representability of (muA, muB, mu(not B), mu(A and not B)):
// the three conjunction conditions on (A, not B) plus the complement
// identity 1 - muB - mu(not B) = 0, tested to eq_tolerance.
ClassicalityVerdict check_negation_representability(double mu_a, double mu_b, double mu_not_b,
                                                    double mu_a_and_not_b,
                                                    double eq_tolerance = 1e-9);

// Independent feasibility check used by the tests: searches for a measure
// on a four-point space and a pair of event subsets reproducing the three
// weights within 1e-9. Enumerates all event-subset assignments; whenever
// an assignment leaves free parameters, scans them across `samples`
// seeded draws. Never consults the representability inequalities.
bool feasibility_oracle(double mu_a, double mu_second, double mu_and, int samples,
                        std::uint64_t seed);

}  // namespace fock
