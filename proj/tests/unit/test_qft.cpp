#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gha/errors.hpp"
#include "gha/qft.hpp"
#include "oracles.hpp"

using namespace gha::qft;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

}  // namespace

TEST_CASE("Stevenson integrals against quadrature") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> log_m2(std::log(1e-2), std::log(1e3));
  std::uniform_real_distribution<double> log_cutoff(std::log(0.5), std::log(500.0));
  for (int i = 0; i < 40; ++i) {
    const double M2 = std::exp(log_m2(rng));
    const double cutoff = std::exp(log_cutoff(rng));
    for (int n : {-1, 0, 1}) {
      CHECK(stevenson(n, M2, cutoff) == doctest::Approx(oracle::stevenson_quadrature(n, M2, cutoff)).epsilon(1e-9));
    }
  }
  const double closed = (10.0 * std::sqrt(101.0) - std::asinh(10.0)) / (8.0 * kPi2);
  CHECK(stevenson(0, 1.0, 10.0) == doctest::Approx(closed).epsilon(1e-13));
  CHECK(stevenson(0, 1.0, 10.0) == doctest::Approx(1.234857).epsilon(1e-6));
  CHECK_THROWS_AS(stevenson(2, 1.0, 10.0), gha::DomainError);
  CHECK_THROWS_AS(stevenson(0, -1.0, 10.0), gha::DomainError);
}

TEST_CASE("Stevenson heavy-mass limit") {
  const double cutoff = 3.0;
  for (double M2 : {1e4, 1e6, 1e8}) {
    const double expected = std::pow(cutoff, 3) / (12.0 * kPi2 * std::pow(M2, 1.5));
    CHECK(stevenson(-1, M2, cutoff) == doctest::Approx(expected).epsilon(1e-3));
  }
}

TEST_CASE("Stevenson derivative identities") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> m2_dist(0.5, 20.0);
  std::uniform_real_distribution<double> cutoff_dist(2.0, 200.0);
  std::vector<std::pair<double, double>> points{{2.0, 50.0}};
  for (int i = 0; i < 20; ++i) points.emplace_back(m2_dist(rng), cutoff_dist(rng));
  for (const auto& [M2, cutoff] : points) {
    const double h = 1e-4;
    const double d1 = (stevenson(1, M2 + h, cutoff) - stevenson(1, M2 - h, cutoff)) / (2.0 * h);
    const double d0 = (stevenson(0, M2 + h, cutoff) - stevenson(0, M2 - h, cutoff)) / (2.0 * h);
    CHECK(d1 == doctest::Approx(stevenson(0, M2, cutoff) / 2.0).epsilon(1e-6));
    CHECK(d0 == doctest::Approx(-stevenson(-1, M2, cutoff) / 2.0).epsilon(1e-6));
  }
}

TEST_CASE("mass gap") {
  const FieldTheory free{1.0, 0.0, 10.0};
  CHECK(solve_mass_gap(free, 0.0).M2 == 1.0);

  const FieldTheory theory{1.0, 0.1, 10.0};
  const GapState s0 = solve_mass_gap(theory, 0.0);
  const GapState s1 = solve_mass_gap(theory, 1.0);
  CHECK(s1.M2 > s0.M2);
  CHECK(s0.M2 > 1.0);
  CHECK(std::abs(s0.residual) < 1e-10 * s0.M2);
  CHECK(s0.i0 == stevenson(0, s0.M2, 10.0));

  // Plain fixed-point iteration converges here (contraction factor 0.6 I_-1 < 1).
  double x = 1.0;
  for (int i = 0; i < 500; ++i) x = 1.0 + 1.2 * stevenson(0, x, 10.0);
  CHECK(s0.M2 == doctest::Approx(x).epsilon(1e-12));

  CHECK_THROWS_AS(solve_mass_gap({1.0, 0.1, 0.0}, 0.0), gha::NoPhysicalRoot);
  CHECK_THROWS_AS(solve_mass_gap({-1.0, 0.1, 10.0}, 0.0), gha::DomainError);
  CHECK_THROWS_AS(solve_mass_gap({1.0, -0.1, 10.0}, 0.0), gha::DomainError);
}

TEST_CASE("mass gap residual changes sign once") {
  for (const FieldTheory& t : {FieldTheory{1.0, 0.1, 10.0}, FieldTheory{0.5, 2.0, 100.0}, FieldTheory{3.0, 0.01, 1e3}}) {
    for (double sigma : {0.0, 0.7, 3.0}) {
      const double lo = t.m2 + 12.0 * t.lambda * sigma * sigma;
      const double hi = lo + 12.0 * t.lambda * stevenson(0, lo, t.cutoff);
      const auto residual = [&](double M2) {
        return M2 - t.m2 - 12.0 * t.lambda * sigma * sigma - 12.0 * t.lambda * stevenson(0, M2, t.cutoff);
      };
      int changes = 0;
      double previous = residual(lo);
      for (int i = 1; i <= 400; ++i) {
        const double value = residual(lo + (hi - lo) * i / 400.0);
        if ((value > 0) != (previous > 0)) ++changes;
        previous = value;
      }
      CHECK(changes <= 1);
      CHECK(residual(lo) <= 0.0);
      CHECK(residual(hi) >= 0.0);
    }
  }
}

TEST_CASE("vev branches of the symmetric theory") {
  for (const FieldTheory& t : {FieldTheory{1.0, 0.1, 10.0}, FieldTheory{1.0, 1e-6, 10.0}, FieldTheory{2.0, 1.0, 50.0}}) {
    const auto branches = vev_branches(t);
    REQUIRE(!branches.empty());
    CHECK(branches.front().sigma == 0.0);
    CHECK(branches.front().physical);
    for (std::size_t i = 1; i < branches.size(); ++i) {
      const auto& b = branches[i];
      CHECK(!b.physical);
      CHECK(std::abs(b.sigma * (b.M2 - 8.0 * t.lambda * b.sigma * b.sigma)) < 1e-10 * std::max(1.0, b.M2));
    }
  }
  CHECK(vev_branches({1.0, 0.1, 10.0}).size() == 1);
}

TEST_CASE("effective potential") {
  const FieldTheory t{1.0, 0.1, 10.0};
  const double u0 = effective_potential(t, 0.0);
  for (double sigma : {0.3, 1.0, 2.5}) {
    CHECK(effective_potential(t, sigma) == effective_potential(t, -sigma));
  }
  const double h = 1e-4;
  CHECK(std::abs(effective_potential(t, h) - effective_potential(t, -h)) / (2.0 * h) <= 1e-7 * std::abs(u0));
  for (int i = -30; i <= 30; ++i) {
    if (i == 0) continue;
    CHECK(effective_potential(t, 0.1 * i) > u0);
  }
}

TEST_CASE("renormalized parameters") {
  const FieldTheory t{1.0, 0.1, 10.0};
  const RenormalizedParams r = renormalized(t);
  const double M2 = solve_mass_gap(t, 0.0).M2;
  CHECK(r.mR2 == doctest::Approx(M2).epsilon(1e-10));

  const double h2 = 1e-3;
  const double u0 = effective_potential(t, 0.0);
  const double fd2 = (effective_potential(t, h2) - 2.0 * u0 + effective_potential(t, -h2)) / (h2 * h2);
  CHECK(fd2 == doctest::Approx(r.mR2).epsilon(1e-4));

  const double h = 0.05;
  const double fd4 = (effective_potential(t, 2 * h) - 4.0 * effective_potential(t, h) + 6.0 * u0 -
                      4.0 * effective_potential(t, -h) + effective_potential(t, -2 * h)) /
                     std::pow(h, 4);
  CHECK(std::abs(r.lambdaR - fd4 / 24.0) < 1e-4 * std::abs(r.lambdaR));

  const RenormalizedParams weak = renormalized({1.0, 1e-9, 10.0});
  CHECK(weak.mR2 == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(weak.lambdaR / 1e-9 == doctest::Approx(1.0).epsilon(1e-6));
  const RenormalizedParams zero = renormalized({1.0, 0.0, 10.0});
  CHECK(zero.mR2 == 1.0);
  CHECK(zero.lambdaR == 0.0);
}

TEST_CASE("renormalized coupling falls monotonically with the cutoff") {
  double previous = 1.0;
  for (double cutoff : {1.0, 10.0, 100.0, 1e3}) {
    const double ratio = renormalized({1.0, 0.01, cutoff}).lambdaR / 0.01;
    CHECK(ratio < previous);
    previous = ratio;
  }
}

TEST_CASE("structure function and density") {
  CHECK(density_ratio(0.0, 2.0) == 1.0);
  CHECK(density_ratio(std::sqrt(2.0), 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(structure_function(1e8, 1.0, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  double previous_rho = 2.0;
  double previous_u = 0.0;
  for (double k = 0.0; k < 50.0; k += 0.25) {
    const double rho = density_ratio(k, 1.7);
    const double u = structure_function(k, 1.0, 1.7);
    CHECK(rho < previous_rho);
    CHECK(u > previous_u);
    CHECK(u < 1.0);
    previous_rho = rho;
    previous_u = u;
  }
  CHECK(peak_density(1.0, 4.0) == doctest::Approx(0.5 / (32.0 * std::pow(std::numbers::pi, 3))).epsilon(1e-15));
  const double beta = 0.5 * std::log(std::sqrt(1.5 * 1.5 + 1.0) / std::sqrt(1.5 * 1.5 + 3.0));
  CHECK(pair_occupation(1.5, 1.0, 3.0) == doctest::Approx(std::sinh(beta) * std::sinh(beta)).epsilon(1e-12));
}

TEST_CASE("Bessel K1 against its integral representation") {
  CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072302).epsilon(1e-10));
  CHECK(bessel_k1(10.0) == doctest::Approx(1.8649e-5).epsilon(1e-4));
  // x K1(x) = 1 + (x^2 / 2) ln(x / 2) + O(x^2); 50-digit evaluation gives 0.99999623815609.
  CHECK(1e-3 * bessel_k1(1e-3) == doctest::Approx(0.99999623815609).epsilon(1e-12));
  for (double x : {1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0, 300.0, 700.0}) {
    CHECK(bessel_k1(x) == doctest::Approx(oracle::k1_integral(x)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(bessel_k1(1e-4), gha::DomainError);
  CHECK_THROWS_AS(bessel_k1(701.0), gha::DomainError);
}

TEST_CASE("static potential") {
  const double mR = 1.3;
  for (int i = 0; i < 20; ++i) {
    const double x = 0.1 * std::pow(100.0, i / 19.0);
    const double r = x / mR;
    CHECK(static_potential(r, mR) == doctest::Approx(oracle::static_potential_fourier(r, mR)).epsilon(1e-6));
  }
  CHECK(1e-6 * 1e-6 * static_potential(1e-6, 1e3) * 4.0 * kPi2 == doctest::Approx(1.0).epsilon(1e-5));
  const double r = 20.0 / mR;
  const double h = 1e-3;
  const auto reduced = [&](double s) { return std::log(static_potential(s, mR)) + 1.5 * std::log(s); };
  const double slope = (reduced(r + h) - reduced(r - h)) / (2.0 * h);
  CHECK(slope == doctest::Approx(-mR).epsilon(1e-2));
  CHECK_THROWS_AS(static_potential(0.0, mR), gha::DomainError);
}
