#include "gha/hartree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gha/errors.hpp"
#include "root_finding.hpp"

namespace gha {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::AHO:
      return "AHO";
    case Phase::DWO_SR:
      return "DWO_SR";
    case Phase::DWO_SSB:
      return "DWO_SSB";
  }
  return "unknown";
}

OscillatorModel::OscillatorModel(int power, double g, double lambda)
    : power_(power), g_(g), lambda_(lambda) {
  if (power != 4 && power != 6 && power != 8) {
    throw DomainError("OscillatorModel: power must be 4, 6 or 8, got " + std::to_string(power));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("OscillatorModel: lambda must be positive, got " + std::to_string(lambda));
  }
  if (g == 0.0 || !std::isfinite(g)) {
    throw DomainError("OscillatorModel: g must be finite and nonzero");
  }
}

namespace {

// Constant term (without sign) of the sigma = 0 gap polynomial.
double gap_source(const OscillatorModel& model, double xi) {
  const double lambda = model.lambda();
  switch (model.power()) {
    case 4:
      return 6.0 * lambda * xi_f(xi);
    case 6:
      return 3.75 * lambda * (4.0 * xi * xi + 5.0);
    default:
      return 35.0 * lambda * xi_h(xi);
  }
}

double gap_derivative(const OscillatorModel& model, double omega) {
  const double g = model.g();
  switch (model.power()) {
    case 4:
      return 3.0 * omega * omega - g;
    case 6:
      return 4.0 * omega * omega * omega - 2.0 * g * omega;
    default:
      return 5.0 * std::pow(omega, 4) - 3.0 * g * omega * omega;
  }
}

double broken_frequency(const OscillatorModel& model, std::uint32_t n) {
  const double xi = level_xi(n);
  const double g = model.g();
  const double lambda_c = critical_coupling(xi, g);
  if (model.power() != 4) {
    throw PhaseUnavailable("broken-symmetry branch is only available for the quartic double well");
  }
  if (model.lambda() > lambda_c) {
    throw PhaseUnavailable("broken-symmetry branch requires lambda <= lambda_c = " +
                           std::to_string(lambda_c));
  }
  const double ratio = std::min(1.0, model.lambda() / lambda_c);
  double omega = 2.0 * std::sqrt(-2.0 * g / 3.0) *
                 std::cos(std::numbers::pi / 6.0 + std::asin(ratio) / 3.0);
  // One guarded Newton step removes the rounding of the trigonometric form.
  const double residual = broken_gap_polynomial(model, n, omega);
  const double slope = 3.0 * omega * omega + 2.0 * g;
  if (slope != 0.0) {
    const double polished = omega - residual / slope;
    if (polished > 0.0 &&
        std::abs(broken_gap_polynomial(model, n, polished)) < std::abs(residual)) {
      omega = polished;
    }
  }
  return omega;
}

}  // namespace

double gap_polynomial(const OscillatorModel& model, std::uint32_t n, double omega) {
  const double g = model.g();
  const double source = gap_source(model, level_xi(n));
  switch (model.power()) {
    case 4:
      return omega * omega * omega - g * omega - source;
    case 6: {
      const double w2 = omega * omega;
      return w2 * w2 - g * w2 - source;
    }
    default: {
      const double w3 = omega * omega * omega;
      return w3 * omega * omega - g * w3 - source;
    }
  }
}

double broken_gap_polynomial(const OscillatorModel& model, std::uint32_t n, double omega) {
  return omega * omega * omega + 2.0 * model.g() * omega +
         6.0 * model.lambda() * xi_p(level_xi(n));
}

double critical_coupling(double xi, double g) {
  if (!(g < 0.0)) {
    throw DomainError("critical_coupling: g must be negative");
  }
  if (!(xi >= 0.5)) {
    throw DomainError("critical_coupling: xi must be >= 1/2");
  }
  return std::pow(-2.0 * g / 3.0, 1.5) / (3.0 * xi_p(xi));
}

double solve_gap(const OscillatorModel& model, std::uint32_t n, Phase phase) {
  if (phase == Phase::DWO_SSB) {
    return broken_frequency(model, n);
  }
  if (phase == Phase::AHO && model.g() < 0.0) {
    throw PhaseUnavailable("AHO phase requested for g < 0");
  }
  if (phase == Phase::DWO_SR && model.g() > 0.0) {
    throw PhaseUnavailable("DWO_SR phase requested for g > 0");
  }

  auto residual = [&](double omega) { return gap_polynomial(model, n, omega); };
  auto slope = [&](double omega) { return gap_derivative(model, omega); };

  double lo = 1e-8;
  double hi = 1.0;
  if (residual(lo) > 0.0) {
    throw NoPhysicalRoot("gap equation: residual positive at the lower bracket");
  }
  int doublings = 0;
  while (residual(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 1100 || !std::isfinite(hi)) {
      throw NoPhysicalRoot("gap equation: failed to bracket the positive root");
    }
  }
  const double omega = detail::bisect_then_polish(residual, slope, lo, hi);
  const double scale = std::max(1.0, std::abs(gap_source(model, level_xi(n))));
  if (!(std::abs(residual(omega)) < 1e-12 * scale)) {
    throw NoPhysicalRoot("gap equation: residual above tolerance after polishing");
  }
  return omega;
}

HartreeCoefficients hartree_coefficients(const OscillatorModel& model, std::uint32_t n,
                                         double omega, double sigma) {
  const double xi = level_xi(n);
  const double g = model.g();
  const double lambda = model.lambda();
  const double s2 = sigma * sigma;
  const double x2 = xi * xi;
  const double w2 = omega * omega;

  HartreeCoefficients out;
  switch (model.power()) {
    case 4:
      out.a = 6.0 * s2 + 3.0 * xi_f(xi) / omega;
      out.b = (1.0 + g) * sigma * w2 / lambda + 4.0 * w2 * s2 * sigma + 12.0 * omega * sigma * xi;
      break;
    case 6:
      out.a = 15.0 * s2 * s2 + 45.0 * s2 * (4.0 * x2 + 1.0) / (4.0 * xi * omega) +
              15.0 / (8.0 * w2) * (4.0 * x2 + 5.0);
      out.b = sigma * ((1.0 + g) * w2 / lambda + 6.0 * w2 * s2 * s2 + 60.0 * s2 * xi * omega +
                       11.25 * (4.0 * x2 + 1.0));
      break;
    default:
      out.a = 28.0 * s2 * s2 * s2 + 105.0 * s2 * s2 * (4.0 * x2 + 1.0) / (2.0 * xi * omega) +
              105.0 / (2.0 * w2) * s2 * (4.0 * x2 + 5.0) + 35.0 * xi_h(xi) / (2.0 * w2 * omega);
      out.b = sigma * ((1.0 + g) * w2 / lambda + 8.0 * w2 * s2 * s2 * s2 +
                       168.0 * s2 * s2 * xi * omega + 105.0 * s2 * (4.0 * x2 + 1.0) +
                       35.0 * xi * (4.0 * x2 + 5.0) / omega);
      break;
  }

  // C fixes the Hartree condition <V> = <phi^power> at this level.
  const ModeParameters mode(omega, sigma);
  const double phi_k = expectation(field_power(static_cast<std::uint32_t>(model.power()), mode), n);
  const double phi_2 = expectation(field_power(2, mode), n);
  const double phi_1 = expectation(field_power(1, mode), n);
  out.c = phi_k - out.a * phi_2 + out.b * phi_1;
  return out;
}

double broken_sigma_squared(const OscillatorModel& model, std::uint32_t n, double omega) {
  const double lambda = model.lambda();
  return -(model.g() + 12.0 * lambda * level_xi(n) / omega) / (4.0 * lambda);
}

double zeroth_energy(const OscillatorModel& model, std::uint32_t n, double omega, Phase phase) {
  const double xi = level_xi(n);
  const double g = model.g();
  switch (model.power()) {
    case 4:
      if (phase == Phase::DWO_SSB) {
        // Reduces to (xi/4)(3w + 2/w) - g^2/(16 lambda) at g = -1.
        return 0.25 * xi * (3.0 * omega - 2.0 * g / omega) - g * g / (16.0 * model.lambda());
      }
      return 0.25 * xi * (3.0 * omega + g / omega);
    case 6:
      if (phase == Phase::DWO_SSB) throw PhaseUnavailable("sextic broken-symmetry spectrum");
      return xi / 3.0 * (2.0 * omega + g / omega);
    default:
      if (phase == Phase::DWO_SSB) throw PhaseUnavailable("octic broken-symmetry spectrum");
      return xi / 8.0 * (5.0 * omega + 3.0 * g / omega);
  }
}

namespace {

HartreeSolution assemble(const OscillatorModel& model, std::uint32_t n, const Branch& branch) {
  HartreeSolution sol;
  sol.n = n;
  sol.xi = level_xi(n);
  sol.omega = branch.omega;
  sol.sigma = branch.sigma;
  sol.phase = branch.phase;
  sol.energy = branch.energy;
  sol.coefficients = hartree_coefficients(model, n, branch.omega, branch.sigma);
  sol.h0 = model.lambda() * sol.coefficients.c - 0.5 * branch.omega * branch.omega *
                                                     branch.sigma * branch.sigma;
  return sol;
}

}  // namespace

HartreeSolution solve_level(const OscillatorModel& model, std::uint32_t n) {
  if (!model.is_double_well()) {
    const double omega = solve_gap(model, n, Phase::AHO);
    const Branch branch{Phase::AHO, omega, 0.0, zeroth_energy(model, n, omega, Phase::AHO)};
    HartreeSolution sol = assemble(model, n, branch);
    sol.branches.push_back(branch);
    return sol;
  }
  if (model.power() != 4) {
    throw DomainError("solve_level: double-well spectra are only supported for power 4");
  }

  const double omega_sr = solve_gap(model, n, Phase::DWO_SR);
  const Branch restored{Phase::DWO_SR, omega_sr, 0.0,
                        zeroth_energy(model, n, omega_sr, Phase::DWO_SR)};
  std::vector<Branch> branches{restored};
  Branch chosen = restored;

  // At exactly lambda_c the restored branch is returned.
  if (model.lambda() < critical_coupling(level_xi(n), model.g())) {
    const double omega_a = solve_gap(model, n, Phase::DWO_SSB);
    const double s2 = broken_sigma_squared(model, n, omega_a);
    if (s2 > 0.0) {
      const Branch broken{Phase::DWO_SSB, omega_a, std::sqrt(s2),
                          zeroth_energy(model, n, omega_a, Phase::DWO_SSB)};
      branches.push_back(broken);
      if (broken.energy < chosen.energy) chosen = broken;
    }
  }

  HartreeSolution sol = assemble(model, n, chosen);
  sol.branches = std::move(branches);
  return sol;
}

GapResiduals general_gap_residuals(const OscillatorModel& model, std::uint32_t n, double omega,
                                   double sigma) {
  const double xi = level_xi(n);
  const double g = model.g();
  const double lambda = model.lambda();
  const double s2 = sigma * sigma;
  const double x2 = xi * xi;
  const double w2 = omega * omega;

  GapResiduals out;
  switch (model.power()) {
    case 4:
      out.gap = w2 * omega - omega * (12.0 * lambda * s2 + g) - 6.0 * lambda * xi_f(xi);
      out.ground_state = sigma * (4.0 * lambda * s2 + g + 12.0 * lambda * xi / omega);
      break;
    case 6:
      out.gap = w2 * w2 - w2 * (g + 30.0 * lambda * s2 * s2) -
                45.0 * lambda * (s2 * omega / (2.0 * xi)) * (4.0 * x2 + 1.0) -
                3.75 * lambda * (4.0 * x2 + 5.0);
      out.ground_state =
          sigma * (g + 6.0 * lambda *
                           (s2 * s2 + 10.0 * xi * s2 / omega + 15.0 * (4.0 * x2 + 1.0) / (8.0 * w2)));
      break;
    default:
      out.gap = w2 * w2 * omega - w2 * omega * (g + 56.0 * lambda * s2 * s2 * s2) -
                105.0 * w2 * (lambda * s2 * s2 / xi) * (4.0 * x2 + 1.0) -
                105.0 * omega * lambda * s2 * (4.0 * x2 + 5.0) - 35.0 * lambda * xi_h(xi);
      out.ground_state =
          sigma * (g + lambda * (8.0 * s2 * s2 * s2 + 168.0 * s2 * s2 * xi / omega +
                                 105.0 * s2 * (4.0 * x2 + 1.0) / w2 +
                                 35.0 * xi * (4.0 * x2 + 5.0) / (w2 * omega)));
      break;
  }
  return out;
}

NormalOrderedPolynomial interaction(const OscillatorModel& model, const ModeParameters& mode) {
  return field_power(static_cast<std::uint32_t>(model.power()), mode);
}

NormalOrderedPolynomial hartree_potential(const HartreeCoefficients& coefficients,
                                          const ModeParameters& mode) {
  return coefficients.a * field_power(2, mode) - coefficients.b * field_power(1, mode) +
         NormalOrderedPolynomial::constant(coefficients.c);
}

NormalOrderedPolynomial full_hamiltonian(const OscillatorModel& model, const ModeParameters& mode) {
  return 0.5 * momentum_squared(mode) + 0.5 * model.g() * field_power(2, mode) +
         model.lambda() * interaction(model, mode);
}

}  // namespace gha
