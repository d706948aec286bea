#include "gha/qft.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "gha/errors.hpp"

namespace gha::qft {

namespace {

constexpr double kPi = std::numbers::pi;

void require_theory(const FieldTheory& theory) {
  if (!(theory.cutoff > 0.0) || !std::isfinite(theory.cutoff)) {
    throw NoPhysicalRoot("field theory: cutoff must be positive");
  }
  if (!(theory.m2 > 0.0) || !std::isfinite(theory.m2)) {
    throw DomainError("field theory: m2 must be positive (symmetric theory)");
  }
  if (!(theory.lambda >= 0.0) || !std::isfinite(theory.lambda)) {
    throw DomainError("field theory: lambda must be non-negative");
  }
}

// int_0^x t^2 (1 + t^2)^a dt as a binomial series; used for x < 1/2.
double reduced_integral_series(double a, double x) {
  const double x2 = x * x;
  double binom = 1.0;
  double power = x * x2;
  double sum = 0.0;
  for (int j = 0; j < 60; ++j) {
    const double term = binom * power / (2.0 * j + 3.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    binom *= (a - j) / (j + 1.0);
    power *= x2;
  }
  return sum;
}

// int_0^x t^2 (1 + t^2)^((2n - 1)/2) dt
double reduced_integral(int n, double x) {
  if (x < 0.5) {
    return reduced_integral_series(0.5 * (2.0 * n - 1.0), x);
  }
  const double root = std::sqrt(1.0 + x * x);
  const double ash = std::asinh(x);
  switch (n) {
    case -1:
      return ash - x / root;
    case 0:
      return 0.5 * (x * root - ash);
    default:
      return 0.125 * (x * root * (2.0 * x * x + 1.0) - ash);
  }
}

}  // namespace

double stevenson(int n, double M2, double cutoff) {
  if (n < -1 || n > 1) {
    throw DomainError("stevenson: only n in {-1, 0, 1} is supported, got " + std::to_string(n));
  }
  if (!(M2 > 0.0) || !std::isfinite(M2)) {
    throw DomainError("stevenson: M2 must be positive");
  }
  if (!(cutoff > 0.0)) {
    throw DomainError("stevenson: cutoff must be positive");
  }
  const double mass = std::sqrt(M2);
  // Substituting k = M t pulls out M^(2n + 2).
  return std::pow(M2, n + 1) * reduced_integral(n, cutoff / mass) / (4.0 * kPi * kPi);
}

GapState solve_mass_gap(const FieldTheory& theory, double sigma) {
  require_theory(theory);
  const double lambda = theory.lambda;
  const double floor = theory.m2 + 12.0 * lambda * sigma * sigma;

  auto residual = [&](double M2) {
    return M2 - floor - 12.0 * lambda * stevenson(0, M2, theory.cutoff);
  };
  auto slope = [&](double M2) { return 1.0 + 6.0 * lambda * stevenson(-1, M2, theory.cutoff); };

  // The right-hand side decreases in M^2, so [floor, floor + 12 lambda I_0(floor)] brackets
  // the unique fixed point.
  double lo = floor;
  double hi = floor + 12.0 * lambda * stevenson(0, floor, theory.cutoff);
  double M2 = hi;
  if (hi > lo) {
    // Safeguarded Newton: bisect whenever a step leaves the current bracket.
    for (int iter = 0; iter < 200; ++iter) {
      const double value = residual(M2);
      if (std::abs(value) <= 1e-15 * M2) break;
      if (value > 0.0) {
        hi = M2;
      } else {
        lo = M2;
      }
      double next = M2 - value / slope(M2);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (next == M2) break;
      M2 = next;
    }
  }

  GapState state;
  state.sigma = sigma;
  state.M2 = M2;
  state.i0 = stevenson(0, M2, theory.cutoff);
  state.i1 = stevenson(1, M2, theory.cutoff);
  state.im1 = stevenson(-1, M2, theory.cutoff);
  state.residual = residual(M2);
  if (!(std::abs(state.residual) < 1e-10 * M2)) {
    throw NoPhysicalRoot("solve_mass_gap: residual above tolerance");
  }
  return state;
}

std::vector<VevBranch> vev_branches(const FieldTheory& theory) {
  const GapState symmetric = solve_mass_gap(theory, 0.0);
  std::vector<VevBranch> out{{0.0, symmetric.M2, true}};
  if (theory.lambda == 0.0) return out;

  // sigma != 0 requires R(sigma) = M^2(sigma) - 8 lambda sigma^2 = 0. Scan a
  // logarithmic sigma grid for sign changes and refine each by bisection.
  auto bracket_value = [&](double sigma) {
    return solve_mass_gap(theory, sigma).M2 - 8.0 * theory.lambda * sigma * sigma;
  };
  const double sigma_max = 100.0 * (theory.cutoff + std::sqrt(theory.m2));
  constexpr int kSamples = 400;
  double prev_sigma = 1e-6 * std::sqrt(theory.m2);
  double prev_value = bracket_value(prev_sigma);
  const double ratio = std::pow(sigma_max / prev_sigma, 1.0 / kSamples);
  for (int i = 1; i <= kSamples; ++i) {
    const double sigma = prev_sigma * ratio;
    const double value = bracket_value(sigma);
    if ((prev_value > 0.0) != (value > 0.0)) {
      double lo = prev_sigma;
      double hi = sigma;
      const bool rising = value > 0.0;
      for (int step = 0; step < 200 && hi - lo > 1e-15 * hi; ++step) {
        const double mid = 0.5 * (lo + hi);
        if ((bracket_value(mid) > 0.0) == rising) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      out.push_back({root, solve_mass_gap(theory, root).M2, false});
    }
    prev_sigma = sigma;
    prev_value = value;
  }
  return out;
}

double effective_potential(const FieldTheory& theory, double sigma) {
  const GapState state = solve_mass_gap(theory, sigma);
  const double s2 = sigma * sigma;
  return state.i1 - 3.0 * theory.lambda * state.i0 * state.i0 + 0.5 * theory.m2 * s2 +
         theory.lambda * s2 * s2;
}

RenormalizedParams renormalized(const FieldTheory& theory) {
  const GapState symmetric = solve_mass_gap(theory, 0.0);
  const double lambda = theory.lambda;
  RenormalizedParams out;
  out.mR2 = theory.m2 + 12.0 * lambda * symmetric.i0;
  out.lambdaR = lambda * (1.0 - 12.0 * lambda * symmetric.im1) / (1.0 + 6.0 * lambda * symmetric.im1);
  return out;
}

double structure_function(double k, double m2, double M2) {
  if (!(m2 > 0.0) || !(M2 > 0.0)) {
    throw DomainError("structure_function: masses must be positive");
  }
  const double k2 = k * k;
  return std::sqrt((k2 + m2) / (k2 + M2));
}

double density_ratio(double k, double mR2) {
  if (!(mR2 > 0.0)) {
    throw DomainError("density_ratio: mR2 must be positive");
  }
  return 1.0 / std::sqrt(1.0 + k * k / mR2);
}

double peak_density(double m2, double mR2) {
  if (!(m2 > 0.0) || !(mR2 > 0.0)) {
    throw DomainError("peak_density: masses must be positive");
  }
  return std::sqrt(m2 / mR2) / (32.0 * kPi * kPi * kPi);
}

double pair_occupation(double k, double m2, double M2) {
  const double u = structure_function(k, m2, M2);
  return (u - 1.0) * (u - 1.0) / (4.0 * u);
}

double bessel_k1(double x) {
  if (!(x >= 1e-3 && x <= 700.0)) {
    throw DomainError("bessel_k1: x must lie in [1e-3, 700]");
  }
  return boost::math::cyl_bessel_k(1, x);
}

double static_potential(double r, double mR) {
  if (!(r > 0.0)) {
    throw DomainError("static_potential: r must be positive");
  }
  if (!(mR > 0.0)) {
    throw DomainError("static_potential: mR must be positive");
  }
  return mR * bessel_k1(mR * r) / (4.0 * kPi * kPi * r);
}

}  // namespace gha::qft
