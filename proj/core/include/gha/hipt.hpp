#pragma once

#include <cstdint>
#include <vector>

#include "gha/hartree.hpp"
#include "gha/ladder_algebra.hpp"

namespace gha {

struct PerturbationContribution {
  std::uint32_t m = 0;
  double numerator = 0.0;    ///< <m| lambda H' |n>
  double denominator = 0.0;  ///< E_n - E_m
};

struct PerturbationReport {
  std::uint32_t n = 0;
  double e0 = 0.0;
  double first_order = 0.0;  ///< <n| lambda H' |n>; zero by construction, kept for inspection
  double delta_e2 = 0.0;
  double e2 = 0.0;
  std::vector<PerturbationContribution> contributions;
};

struct HiptOptions {
  /// Keep only even |m - n| couplings, as in the quartic discussion of the method.
  bool strict_paper = false;
};

/// H' = phi^power - (A phi^2 - B phi + C) in the Hartree basis of `solution`.
NormalOrderedPolynomial build_h_prime(const OscillatorModel& model, const HartreeSolution& solution);

/// Second-order correction at level n.
///
/// Matrix elements are taken in the level-n Hartree basis (omega(n), sigma(n)).
/// Energy denominators use the zeroth-order energy of each intermediate level m
/// solved with its own gap equation.
PerturbationReport second_order(const OscillatorModel& model, std::uint32_t n,
                                const HiptOptions& options = {});

}  // namespace gha
