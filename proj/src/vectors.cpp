#include "fock/vectors.hpp"

#include <algorithm>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex phase_factor(double degrees) {
  double rad = degrees * kPi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

}  // namespace

Complex inner(const CVec3& x, const CVec3& y) {
  Complex sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

Complex inner(const CVec9& x, const CVec9& y) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < 9; ++i) sum += std::conj(x.c[i]) * y.c[i];
  return sum;
}

double norm(const CVec3& x) { return std::sqrt(inner(x, x).real()); }

CVec3 scale(Complex s, const CVec3& x) {
  CVec3 out;
  for (int i = 0; i < 3; ++i) out[i] = s * x[i];
  return out;
}

CVec3 add(const CVec3& x, const CVec3& y) {
  CVec3 out;
  for (int i = 0; i < 3; ++i) out[i] = x[i] + y[i];
  return out;
}

CVec3 matvec(const CMat3& m, const CVec3& x) {
  CVec3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < 3; ++c) sum += m.m[r][c] * x.c[c];
    out.c[r] = sum;
  }
  return out;
}

CVec9 matvec(const CMat9& m, const CVec9& x) {
  CVec9 out;
  for (std::size_t r = 0; r < 9; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < 9; ++c) sum += m.m[r][c] * x.c[c];
    out.c[r] = sum;
  }
  return out;
}

CVec9 kron(const CVec3& x, const CVec3& y) {
  CVec9 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.c[3 * i + j] = x.c[i] * y.c[j];
  }
  return out;
}

CMat9 kron(const CMat3& x, const CMat3& y) {
  CMat9 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) {
          out.m[3 * i + k][3 * j + l] = x.m[i][j] * y.m[k][l];
        }
      }
    }
  }
  return out;
}

CMat3 identity3() {
  CMat3 out;
  for (std::size_t i = 0; i < 3; ++i) out.m[i][i] = 1.0;
  return out;
}

CMat9 add(const CMat9& x, const CMat9& y) {
  CMat9 out;
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) out.m[r][c] = x.m[r][c] + y.m[r][c];
  }
  return out;
}

CMat9 subtract(const CMat9& x, const CMat9& y) {
  CMat9 out;
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) out.m[r][c] = x.m[r][c] - y.m[r][c];
  }
  return out;
}

bool is_hermitian(const CMat3& m, double tolerance) {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (std::abs(m.m[r][c] - std::conj(m.m[c][r])) > tolerance) return false;
    }
  }
  return true;
}

bool is_idempotent(const CMat3& m, double tolerance) {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += m.m[r][k] * m.m[k][c];
      if (std::abs(sum - m.m[r][c]) > tolerance) return false;
    }
  }
  return true;
}

std::array<double, 3> ConceptVectorPair::vec_b_stripped() const {
  return {std::abs(vec_b[0]), std::abs(vec_b[1]), -std::abs(vec_b[2])};
}

ConceptVectorPair build_vectors(const RegimeParams& rp, double theta_deg) {
  const double a = rp.a;
  const double b = rp.b;
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw Error("build_vectors: regime parameters outside [0,1]");
  }

  ConceptVectorPair pair;
  pair.regime = rp;
  pair.theta_deg = theta_deg;
  pair.phase_deg = rp.regime == Regime::SumGT1 ? theta_deg : 180.0 - theta_deg;
  Complex phase = phase_factor(pair.phase_deg);

  pair.vec_a[0] = std::sqrt(a);
  pair.vec_a[1] = 0.0;
  pair.vec_a[2] = std::sqrt(1.0 - a);

  if (a == 0.0) {
    pair.vec_b[0] = 0.0;
    pair.vec_b[1] = phase;
    pair.vec_b[2] = 0.0;
    return pair;
  }
  double r0 = std::sqrt((1.0 - a) * (1.0 - b) / a);
  double r1 = std::sqrt(std::max(a + b - 1.0, 0.0) / a);
  double r2 = std::sqrt(1.0 - b);
  pair.vec_b[0] = phase * r0;
  pair.vec_b[1] = phase * r1;
  pair.vec_b[2] = phase * (-r2);
  return pair;
}

CMat3 projector_for_regime(Regime regime) {
  CMat3 m;
  if (regime == Regime::SumGT1) {
    m.m[0][0] = 1.0;
    m.m[1][1] = 1.0;
  } else {
    m.m[2][2] = 1.0;
  }
  return m;
}

FockState assemble_fock_state(const ConceptVectorPair& pair, const FockParameters& params,
                              double phase_lambda_deg, double phase_nu_deg) {
  params.validate();
  if (std::abs(inner(pair.vec_a, pair.vec_b)) > 1e-9) {
    throw Error("assemble_fock_state: non-orthogonal concept vectors");
  }
  FockState state;
  state.sector1 = scale(1.0 / std::sqrt(2.0), add(pair.vec_a, pair.vec_b));
  state.sector2_a = pair.vec_a;
  state.sector2_b = pair.vec_b;
  state.m = std::sqrt(params.m2);
  state.n = std::sqrt(params.n2);
  state.phase_lambda_deg = phase_lambda_deg;
  state.phase_nu_deg = phase_nu_deg;
  return state;
}

double evaluate_fock(const FockState& state, const CMat3& m_proj, ConnectiveKind kind) {
  // Sector 1: n e^{i nu} (A + B)/sqrt(2) measured through M.
  CVec3 s1 = scale(state.n * phase_factor(state.phase_nu_deg), state.sector1);
  double value = inner(s1, matvec(m_proj, s1)).real();

  // Sector 2: m e^{i lambda} A (x) B measured through the two-copy operator.
  CVec9 s2 = kron(scale(state.m * phase_factor(state.phase_lambda_deg), state.sector2_a),
                  state.sector2_b);
  CMat9 op2 = kron(m_proj, m_proj);
  if (kind == ConnectiveKind::Disjunction) {
    CMat3 id = identity3();
    op2 = subtract(add(kron(m_proj, id), kron(id, m_proj)), op2);
  }
  value += inner(s2, matvec(op2, s2)).real();

  if (value < -1e-9 || value > 1.0 + 1e-9) {
    throw Error("evaluate_fock: value outside [0,1]: " + std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace fock
