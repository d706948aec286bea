#pragma once

#include <vector>

namespace gha::qft {

/// Symmetric lambda phi^4 theory with a sharp momentum cutoff |k| < cutoff.
struct FieldTheory {
  double m2 = 1.0;      ///< bare mass squared, > 0
  double lambda = 0.0;  ///< >= 0
  double cutoff = 1.0;  ///< > 0
};

/// I_n(M^2) = (1 / 4 pi^2) * int_0^cutoff k^2 (k^2 + M^2)^((2n - 1)/2) dk, n in {-1, 0, 1}.
double stevenson(int n, double M2, double cutoff);

struct GapState {
  double sigma = 0.0;
  double M2 = 0.0;
  double i0 = 0.0;
  double i1 = 0.0;
  double im1 = 0.0;
  /// M^2 - m^2 - 12 lambda sigma^2 - 12 lambda I_0(M^2)
  double residual = 0.0;
};

/// Unique root of M^2 = m^2 + 12 lambda sigma^2 + 12 lambda I_0(M^2).
GapState solve_mass_gap(const FieldTheory& theory, double sigma);

struct VevBranch {
  double sigma = 0.0;
  double M2 = 0.0;
  bool physical = false;
};

/// The sigma = 0 branch plus every sigma > 0 solution of M^2(sigma) = 8 lambda sigma^2.
std::vector<VevBranch> vev_branches(const FieldTheory& theory);

/// U(sigma) = I_1 - 3 lambda I_0^2 + m^2 sigma^2 / 2 + lambda sigma^4 at M^2(sigma).
double effective_potential(const FieldTheory& theory, double sigma);

struct RenormalizedParams {
  double mR2 = 0.0;
  double lambdaR = 0.0;
};

RenormalizedParams renormalized(const FieldTheory& theory);

/// u(k) = sqrt((k^2 + m^2) / (k^2 + M^2))
double structure_function(double k, double m2, double M2);

/// rho(k) = (1 + k^2 / m_R^2)^(-1/2), the cutoff -> infinity density ratio n(k)/n(0).
double density_ratio(double k, double mR2);

/// n(0) = (m / m_R) / (32 pi^3)
double peak_density(double m2, double mR2);

/// Finite-cutoff pair occupation sinh^2(beta(k)), beta(k) = (1/2) ln(omega_k(m) / omega_k(M)).
double pair_occupation(double k, double m2, double M2);

/// Modified Bessel function K_1 on [1e-3, 700].
double bessel_k1(double x);

/// U(r) = m_R K_1(m_R r) / (4 pi^2 r)
double static_potential(double r, double mR);

}  // namespace gha::qft
