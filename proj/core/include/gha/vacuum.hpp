#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gha/hartree.hpp"

namespace gha {

/// Scalar observables of the Hartree vacuum relative to the free (omega = 1) vacuum.
struct VacuumStructure {
  double alpha = 0.0;  ///< Bogoliubov parameter, (1/2) ln(1/omega)
  double n0 = 0.0;     ///< free-particle number density, sinh^2(alpha)
  double u = 0.0;      ///< (1 - omega) / (1 + omega)
};

VacuumStructure vacuum_structure(double omega);

struct CondensateSample {
  double lambda = 0.0;
  double n0 = 0.0;
};

/// n0 of the quartic anharmonic oscillator (level `n`) for each coupling.
std::vector<CondensateSample> strong_coupling_scaling(const OscillatorModel& model,
                                                      std::span<const double> lambdas,
                                                      std::uint32_t n = 0);

/// Least-squares slope of ln n0 against ln lambda.
double log_log_slope(std::span<const CondensateSample> samples);

}  // namespace gha
