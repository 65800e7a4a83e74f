#include "fock/classicality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace fock {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw Error(std::string(name) + " outside [0,1]: " + std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Ineq01: return "Ineq01";
    case Condition::Ineq02: return "Ineq02";
    case Condition::Ineq03: return "Ineq03";
    case Condition::Ineq04: return "Ineq04";
    case Condition::Ineq05: return "Ineq05";
    case Condition::Ineq06: return "Ineq06";
    case Condition::Eq07: return "Eq07";
  }
  return "?";
}

bool KolmogorovAtoms::nonnegative(double tolerance) const {
  return p1 >= -tolerance && p2 >= -tolerance && p3 >= -tolerance && p4 >= -tolerance;
}

ConjunctionDiagnostics conjunction_diagnostics(double mu_a, double mu_b, double mu_a_and_b) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_b, "mu_B");
  require_unit_interval(mu_a_and_b, "mu_AandB");
  ConjunctionDiagnostics d;
  d.delta = mu_a_and_b - std::min(mu_a, mu_b);
  d.k = 1.0 - mu_a - mu_b + mu_a_and_b;
  d.doub = std::max(mu_a, mu_b) - mu_a_and_b;
  return d;
}

NegationDiagnostics negation_diagnostics(double mu_a, double mu_b, double mu_not_b,
                                         double mu_a_and_not_b) {
  require_unit_interval(mu_b, "mu_B");
  ConjunctionDiagnostics base = conjunction_diagnostics(mu_a, mu_not_b, mu_a_and_not_b);
  NegationDiagnostics d;
  d.delta = base.delta;
  d.k = base.k;
  d.doub = base.doub;
  d.l = 1.0 - mu_b - mu_not_b;
  return d;
}

KolmogorovAtoms atom_construction(double mu_a, double mu_second, double mu_and) {
  KolmogorovAtoms atoms;
  atoms.p1 = mu_and;
  atoms.p2 = mu_a - mu_and;
  atoms.p3 = mu_second - mu_and;
  atoms.p4 = 1.0 - mu_a - mu_second + mu_and;
  return atoms;
}

namespace {

KolmogorovAtoms checked_atoms(double mu_a, double mu_second, double mu_and) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_second, "mu_second");
  require_unit_interval(mu_and, "mu_and");
  KolmogorovAtoms atoms = atom_construction(mu_a, mu_second, mu_and);
  const std::array<double, 4> p = {atoms.p1, atoms.p2, atoms.p3, atoms.p4};
  for (int i = 0; i < 4; ++i) {
    if (p[static_cast<std::size_t>(i)] < 0.0) {
      throw NegativeAtomError(i + 1, p[static_cast<std::size_t>(i)]);
    }
  }
  return atoms;
}

ClassicalityVerdict conjunction_style_verdict(double mu_a, double mu_second, double mu_and,
                                              bool negation) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_second, negation ? "mu_notB" : "mu_B");
  require_unit_interval(mu_and, "mu_and");
  ClassicalityVerdict v;
  // With all inputs inside [0,1] only the cross comparisons can fail.
  if (mu_and > mu_a) {
    v.violated.push_back(negation ? Condition::Ineq04 : Condition::Ineq01);
  }
  if (mu_and > mu_second) {
    v.violated.push_back(negation ? Condition::Ineq05 : Condition::Ineq02);
  }
  if (mu_a + mu_second - mu_and > 1.0) {
    v.violated.push_back(negation ? Condition::Ineq06 : Condition::Ineq03);
  }
  return v;
}

}  // namespace

KolmogorovAtoms construct_atoms_conjunction(double mu_a, double mu_b, double mu_a_and_b) {
  return checked_atoms(mu_a, mu_b, mu_a_and_b);
}

KolmogorovAtoms construct_atoms_negation(double mu_a, double mu_not_b, double mu_a_and_not_b) {
  return checked_atoms(mu_a, mu_not_b, mu_a_and_not_b);
}

ClassicalityVerdict check_conjunction_representability(double mu_a, double mu_b, double mu_a_and_b) {
  ClassicalityVerdict v = conjunction_style_verdict(mu_a, mu_b, mu_a_and_b, false);
  v.representable = v.violated.empty();
  if (v.representable) {
    v.atoms = construct_atoms_conjunction(mu_a, mu_b, mu_a_and_b);
  }
  return v;
}

ClassicalityVerdict check_negation_representability(double mu_a, double mu_b, double mu_not_b,
                                   double mu_a_and_not_b, double eq_tolerance) {
  require_unit_interval(mu_b, "mu_B");
  ClassicalityVerdict v = conjunction_style_verdict(mu_a, mu_not_b, mu_a_and_not_b, true);
  if (std::abs(1.0 - mu_b - mu_not_b) > eq_tolerance) {
    v.violated.push_back(Condition::Eq07);
  }
  v.representable = v.violated.empty();
  if (v.representable) {
    v.atoms = construct_atoms_negation(mu_a, mu_not_b, mu_a_and_not_b);
  }
  return v;
}

// ---- feasibility oracle --------------------------------------------------

namespace {

constexpr double kOracleTol = 1e-9;

// Gauss elimination with partial pivoting over the 4x4 augmented system.
// After eliminate(), pinned variables are expressed in terms of the free
// ones; solve() fills a candidate measure for given free values.
struct LinearSystem {
  std::array<std::array<double, 5>, 4> aug{};  // [row][0..3 coeffs, 4 rhs]
  std::size_t rank = 0;
  std::array<std::size_t, 4> pivot_col{};
  std::array<bool, 4> is_free{};

  bool eliminate() {
    std::size_t row = 0;
    std::array<bool, 4> used_col{};
    for (std::size_t col = 0; col < 4 && row < 4; ++col) {
      std::size_t best = 4;
      double best_abs = 1e-12;
      for (std::size_t r = row; r < 4; ++r) {
        if (std::abs(aug[r][col]) > best_abs) {
          best_abs = std::abs(aug[r][col]);
          best = r;
        }
      }
      if (best == 4) continue;
      std::swap(aug[row], aug[best]);
      double inv = 1.0 / aug[row][col];
      for (auto& x : aug[row]) x *= inv;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == row || aug[r][col] == 0.0) continue;
        double f = aug[r][col];
        for (std::size_t c = 0; c < 5; ++c) aug[r][c] -= f * aug[row][c];
      }
      pivot_col[row] = col;
      used_col[col] = true;
      ++row;
    }
    rank = row;
    for (std::size_t r = rank; r < 4; ++r) {
      if (std::abs(aug[r][4]) > kOracleTol) return false;  // inconsistent
    }
    for (std::size_t c = 0; c < 4; ++c) is_free[c] = !used_col[c];
    return true;
  }

  std::array<double, 4> solve(const std::array<double, 4>& free_values) const {
    std::array<double, 4> p{};
    for (std::size_t c = 0; c < 4; ++c) {
      if (is_free[c]) p[c] = free_values[c];
    }
    for (std::size_t r = rank; r-- > 0;) {
      double v = aug[r][4];
      for (std::size_t c = 0; c < 4; ++c) {
        if (c != pivot_col[r]) v -= aug[r][c] * p[c];
      }
      p[pivot_col[r]] = v;
    }
    return p;
  }
};

bool measure_matches(const std::array<double, 4>& p, unsigned ea, unsigned eb, double mu_a,
                     double mu_second, double mu_and) {
  double total = 0.0, sa = 0.0, sb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] < -kOracleTol) return false;
    total += p[i];
    if (ea & (1u << i)) sa += p[i];
    if (eb & (1u << i)) sb += p[i];
    if ((ea & eb) & (1u << i)) sab += p[i];
  }
  return std::abs(total - 1.0) <= kOracleTol && std::abs(sa - mu_a) <= kOracleTol &&
         std::abs(sb - mu_second) <= kOracleTol && std::abs(sab - mu_and) <= kOracleTol;
}

}  // namespace

bool feasibility_oracle(double mu_a, double mu_second, double mu_and, int samples,
                        std::uint64_t seed) {
  require_unit_interval(mu_a, "mu_A");
  require_unit_interval(mu_second, "mu_second");
  require_unit_interval(mu_and, "mu_and");
  if (samples < 1) {
    throw Error("feasibility_oracle: samples must be >= 1");
  }
  std::mt19937_64 rng(seed);

  // Try every way of carving the two events out of a four-point space.
  for (unsigned ea = 0; ea < 16; ++ea) {
    for (unsigned eb = 0; eb < 16; ++eb) {
      LinearSystem sys;
      for (std::size_t i = 0; i < 4; ++i) {
        sys.aug[0][i] = (ea & (1u << i)) ? 1.0 : 0.0;
        sys.aug[1][i] = (eb & (1u << i)) ? 1.0 : 0.0;
        sys.aug[2][i] = ((ea & eb) & (1u << i)) ? 1.0 : 0.0;
        sys.aug[3][i] = 1.0;
      }
      sys.aug[0][4] = mu_a;
      sys.aug[1][4] = mu_second;
      sys.aug[2][4] = mu_and;
      sys.aug[3][4] = 1.0;
      if (!sys.eliminate()) continue;

      if (sys.rank == 4) {
        if (measure_matches(sys.solve({}), ea, eb, mu_a, mu_second, mu_and)) return true;
        continue;
      }

      // Underdetermined assignment: sweep the free coordinates over a unit
      // grid plus seeded random draws.
      std::array<std::size_t, 4> free_idx{};
      std::size_t free_count = 0;
      for (std::size_t c = 0; c < 4; ++c) {
        if (sys.is_free[c]) free_idx[free_count++] = c;
      }
      int grid = std::max(
          2, static_cast<int>(std::ceil(std::pow(samples, 1.0 / static_cast<double>(free_count)))));
      long combos = 1;
      for (std::size_t f = 0; f < free_count; ++f) combos *= grid;
      std::array<double, 4> fv{};
      for (long it = 0; it < combos; ++it) {
        long rem = it;
        for (std::size_t f = 0; f < free_count; ++f) {
          fv[free_idx[f]] = static_cast<double>(rem % grid) / (grid - 1);
          rem /= grid;
        }
        if (measure_matches(sys.solve(fv), ea, eb, mu_a, mu_second, mu_and)) return true;
      }
      for (int it = 0; it < samples; ++it) {
        for (std::size_t f = 0; f < free_count; ++f) {
          fv[free_idx[f]] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }
        if (measure_matches(sys.solve(fv), ea, eb, mu_a, mu_second, mu_and)) return true;
      }
    }
  }
  return false;
}

}  // namespace fock
