#pragma once

#include <array>
#include <complex>

#include "fock/model.hpp"

namespace fock {

using Complex = std::complex<double>;

// Minimal dense complex linear algebra for the 3-dimensional one-concept
// space and its 9-dimensional two-copy tensor product.
struct CVec3 {
  std::array<Complex, 3> c{};

  Complex& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

struct CMat3 {
  // m[row][col]
  std::array<std::array<Complex, 3>, 3> m{};
};

struct CVec9 {
  std::array<Complex, 9> c{};
};

struct CMat9 {
  std::array<std::array<Complex, 9>, 9> m{};
};

Complex inner(const CVec3& x, const CVec3& y);  // conjugate-linear in x
Complex inner(const CVec9& x, const CVec9& y);
double norm(const CVec3& x);
CVec3 scale(Complex s, const CVec3& x);
CVec3 add(const CVec3& x, const CVec3& y);
CVec3 matvec(const CMat3& m, const CVec3& x);
CVec9 matvec(const CMat9& m, const CVec9& x);
CVec9 kron(const CVec3& x, const CVec3& y);
CMat9 kron(const CMat3& x, const CMat3& y);
CMat3 identity3();
CMat9 add(const CMat9& x, const CMat9& y);
CMat9 subtract(const CMat9& x, const CMat9& y);

bool is_hermitian(const CMat3& m, double tolerance);
bool is_idempotent(const CMat3& m, double tolerance);

// Unit vectors representing the two concepts relative to one exemplar.
// vec_a is real; vec_b carries a global phase chosen so that the cross
// term realized through the regime's projector equals
// sqrt(1-a) sqrt(1-b) cos(theta): the phase is theta itself in the
// SumGT1 regime and 180 - theta in the SumLE1 regime.
struct ConceptVectorPair {
  CVec3 vec_a;
  CVec3 vec_b;
  RegimeParams regime;
  double theta_deg = 0.0;
  double phase_deg = 0.0;  // the global phase stored inside vec_b

  // |vec_b| with the global phase removed and the sign pattern restored
  // (third component negative), for comparison against published tables.
  std::array<double, 3> vec_b_stripped() const;
};

// Builds the canonical-basis representation
//   A = (sqrt(a), 0, sqrt(1-a))
//   B = e^{i phase} (sqrt((1-a)(1-b)/a), sqrt((a+b-1)/a), -sqrt(1-b))
// with B = e^{i phase} (0, 1, 0) when a = 0. Orthogonal unit vectors for
// any admissible inputs.
ConceptVectorPair build_vectors(const RegimeParams& rp, double theta_deg);

// The membership projector: onto the first two canonical coordinates when
// the weights exceed one in sum, onto the third otherwise. Recovers
// mu = <v|M|v> for both concept vectors in both regimes.
CMat3 projector_for_regime(Regime regime);

// Two-sector state: a tensor-product component weighted m and a
// superposition component weighted n, with free sector phases.
struct FockState {
  CVec3 sector1;    // (A + B)/sqrt(2); exactly unit norm by orthogonality
  CVec3 sector2_a;  // first tensor factor
  CVec3 sector2_b;  // second tensor factor
  double m = 0.0;
  double n = 0.0;
  double phase_lambda_deg = 0.0;
  double phase_nu_deg = 0.0;
};

// Throws Error when the pair is not orthogonal (NonOrthogonalInputs) or
// the parameters carry no concrete angle-independent weights.
FockState assemble_fock_state(const ConceptVectorPair& pair, const FockParameters& params,
                              double phase_lambda_deg = 0.0, double phase_nu_deg = 0.0);

// Membership weight by explicit operator algebra:
//   m^2 <s2| Op2 |s2> + n^2 <s1| M |s1>
// where Op2 is M (x) M for the conjunction and
// M (x) 1 + 1 (x) M - M (x) M for the disjunction. The direct-sum block
// structure makes the sector phases drop out.
double evaluate_fock(const FockState& state, const CMat3& m_proj, ConnectiveKind kind);

}  // namespace fock
