#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gha/ladder_algebra.hpp"

namespace gha {

enum class Phase { AHO, DWO_SR, DWO_SSB };

std::string_view to_string(Phase phase);

/// H = p^2/2 + g phi^2/2 + lambda phi^power, power in {4, 6, 8}.
/// g > 0 is the anharmonic oscillator, g < 0 the double well.
class OscillatorModel {
 public:
  OscillatorModel(int power, double g, double lambda);

  int power() const { return power_; }
  double g() const { return g_; }
  double lambda() const { return lambda_; }
  bool is_double_well() const { return g_ < 0.0; }

  OscillatorModel with_lambda(double lambda) const { return {power_, g_, lambda}; }

 private:
  int power_;
  double g_;
  double lambda_;
};

/// Level index n -> xi = n + 1/2.
constexpr double level_xi(std::uint32_t n) { return static_cast<double>(n) + 0.5; }

// Level functions entering the gap equations.
constexpr double xi_f(double xi) { return xi + 1.0 / (4.0 * xi); }
constexpr double xi_p(double xi) { return 5.0 * xi - 1.0 / (4.0 * xi); }
constexpr double xi_h(double xi) { return xi * xi * xi + 3.5 * xi + 9.0 / (16.0 * xi); }

/// Coefficients of the Hartree potential V = A phi^2 - B phi + C.
struct HartreeCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// One candidate self-consistent branch for a level.
struct Branch {
  Phase phase = Phase::AHO;
  double omega = 0.0;
  double sigma = 0.0;
  double energy = 0.0;
};

struct HartreeSolution {
  std::uint32_t n = 0;
  double xi = 0.5;
  double omega = 1.0;
  double sigma = 0.0;
  Phase phase = Phase::AHO;
  HartreeCoefficients coefficients;
  double h0 = 0.0;      ///< H0 = p^2/2 + omega^2 (phi - sigma)^2 / 2 + h0
  double energy = 0.0;  ///< zeroth-order E_n (raw, no reporting shift)
  /// Every branch that was evaluated; for the double well below lambda_c this
  /// holds both the broken and the restored solution.
  std::vector<Branch> branches;

  ModeParameters mode() const { return ModeParameters(omega, sigma); }
};

struct GapResiduals {
  double gap = 0.0;
  double ground_state = 0.0;
};

/// Positive root of the sigma = 0 gap equation for the requested phase, or the
/// closed-form broken-symmetry frequency for Phase::DWO_SSB.
double solve_gap(const OscillatorModel& model, std::uint32_t n, Phase phase);

/// Left-hand side of the sigma = 0 gap polynomial (zero at the physical omega).
double gap_polynomial(const OscillatorModel& model, std::uint32_t n, double omega);

/// Left-hand side of the broken-symmetry cubic omega^3 + 2 g omega + 6 lambda p(xi).
double broken_gap_polynomial(const OscillatorModel& model, std::uint32_t n, double omega);

/// Coupling below which the quartic double well has a broken-symmetry branch.
double critical_coupling(double xi, double g);

HartreeCoefficients hartree_coefficients(const OscillatorModel& model, std::uint32_t n,
                                         double omega, double sigma);

/// Squared VEV on the quartic broken-symmetry branch.
double broken_sigma_squared(const OscillatorModel& model, std::uint32_t n, double omega);

double zeroth_energy(const OscillatorModel& model, std::uint32_t n, double omega, Phase phase);

HartreeSolution solve_level(const OscillatorModel& model, std::uint32_t n);

/// Full coupled residuals (gap equation, ground-state equation) for sigma != 0.
GapResiduals general_gap_residuals(const OscillatorModel& model, std::uint32_t n, double omega,
                                   double sigma);

/// phi^power in the given mode.
NormalOrderedPolynomial interaction(const OscillatorModel& model, const ModeParameters& mode);

/// A phi^2 - B phi + C in the given mode.
NormalOrderedPolynomial hartree_potential(const HartreeCoefficients& coefficients,
                                          const ModeParameters& mode);

/// p^2/2 + g phi^2/2 + lambda phi^power expressed in the given mode.
NormalOrderedPolynomial full_hamiltonian(const OscillatorModel& model, const ModeParameters& mode);

}  // namespace gha
