#include "gha/hipt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace gha {

NormalOrderedPolynomial build_h_prime(const OscillatorModel& model, const HartreeSolution& solution) {
  const ModeParameters mode = solution.mode();
  return interaction(model, mode) - hartree_potential(solution.coefficients, mode);
}

PerturbationReport second_order(const OscillatorModel& model, std::uint32_t n,
                                const HiptOptions& options) {
  const HartreeSolution level = solve_level(model, n);
  const NormalOrderedPolynomial h_prime = build_h_prime(model, level);
  const double lambda = model.lambda();

  PerturbationReport report;
  report.n = n;
  report.e0 = level.energy;
  report.first_order = lambda * matrix_element(h_prime, n, n);

  const auto band = static_cast<std::uint32_t>(model.power());
  const std::uint32_t first = n > band ? n - band : 0;
  // Couplings that cancel analytically (e.g. <2|H'|0> in the quartic ground
  // state) leave rounding noise far below this floor.
  const double noise_floor = 1e-12 * std::max(1.0, std::abs(level.energy));

  for (std::uint32_t m = first; m <= n + band; ++m) {
    if (m == n) continue;
    const std::uint32_t gap = m > n ? m - n : n - m;
    if (options.strict_paper && gap % 2 != 0) continue;
    const double numerator = lambda * matrix_element(h_prime, m, n);
    if (std::abs(numerator) <= noise_floor) continue;
    const double denominator = level.energy - solve_level(model, m).energy;
    report.contributions.push_back({m, numerator, denominator});
    report.delta_e2 += numerator * numerator / denominator;
  }
  report.e2 = report.e0 + report.delta_e2;
  return report;
}

}  // namespace gha
