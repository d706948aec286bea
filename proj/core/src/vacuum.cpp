#include "gha/vacuum.hpp"

#include <cmath>

#include "gha/errors.hpp"

namespace gha {

VacuumStructure vacuum_structure(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("vacuum_structure: omega must be positive");
  }
  VacuumStructure out;
  out.alpha = 0.5 * std::log(1.0 / omega);
  // (omega - 1)^2 / (4 omega) == (omega + 1/omega - 2) / 4 without cancellation near omega = 1.
  out.n0 = (omega - 1.0) * (omega - 1.0) / (4.0 * omega);
  out.u = (1.0 - omega) / (1.0 + omega);
  return out;
}

std::vector<CondensateSample> strong_coupling_scaling(const OscillatorModel& model,
                                                      std::span<const double> lambdas,
                                                      std::uint32_t n) {
  if (model.power() != 4 || model.is_double_well()) {
    throw DomainError("strong_coupling_scaling: defined for the quartic anharmonic oscillator");
  }
  std::vector<CondensateSample> out;
  out.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    const OscillatorModel at = model.with_lambda(lambda);
    const double omega = solve_gap(at, n, Phase::AHO);
    out.push_back({lambda, vacuum_structure(omega).n0});
  }
  return out;
}

double log_log_slope(std::span<const CondensateSample> samples) {
  if (samples.size() < 2) {
    throw DomainError("log_log_slope: need at least two samples");
  }
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& s : samples) {
    if (!(s.lambda > 0.0) || !(s.n0 > 0.0)) {
      throw DomainError("log_log_slope: samples must be positive");
    }
    const double x = std::log(s.lambda);
    const double y = std::log(s.n0);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto count = static_cast<double>(samples.size());
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    throw DomainError("log_log_slope: couplings must not all coincide");
  }
  return (count * sxy - sx * sy) / denom;
}

}  // namespace gha
