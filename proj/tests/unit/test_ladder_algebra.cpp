#include <doctest.h>

#include <cmath>
#include <random>

#include "gha/errors.hpp"
#include "gha/ladder_algebra.hpp"
#include "oracles.hpp"

using gha::ModeParameters;
using gha::NormalOrderedPolynomial;

namespace {

NormalOrderedPolynomial random_polynomial(std::mt19937_64& rng, std::uint32_t max_degree) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::bernoulli_distribution keep(0.5);
  NormalOrderedPolynomial p;
  for (std::uint32_t i = 0; i <= max_degree; ++i) {
    for (std::uint32_t j = 0; i + j <= max_degree; ++j) {
      if (keep(rng)) p.add_term(i, j, coeff(rng));
    }
  }
  return p;
}

NormalOrderedPolynomial field(double omega) {
  return field_power(1, ModeParameters(omega));
}

}  // namespace

TEST_CASE("ModeParameters rejects non-positive frequency") {
  CHECK_THROWS_AS(ModeParameters(0.0), gha::DomainError);
  CHECK_THROWS_AS(ModeParameters(-1.0), gha::DomainError);
  CHECK_THROWS_AS(ModeParameters(std::nan("")), gha::DomainError);
}

TEST_CASE("canonical storage drops zeros and merges terms") {
  NormalOrderedPolynomial p;
  p.add_term(1, 1, 2.0);
  p.add_term(1, 1, -2.0);
  CHECK(p.empty());
  p.add_term(2, 0, 1.0);
  p.add_term(2, 0, 0.5);
  CHECK(p.size() == 1);
  CHECK(p.coefficient(2, 0) == doctest::Approx(1.5));
  CHECK(p.degree() == 2);
}

TEST_CASE("commutator and products") {
  const auto b = NormalOrderedPolynomial::annihilation();
  const auto bd = NormalOrderedPolynomial::creation();
  const auto bbd = multiply(b, bd);
  CHECK(bbd.size() == 2);
  CHECK(bbd.coefficient(1, 1) == 1.0);
  CHECK(bbd.coefficient(0, 0) == 1.0);

  const auto x = b + bd;
  const auto x2 = multiply(x, x);
  CHECK(x2.coefficient(2, 0) == 1.0);
  CHECK(x2.coefficient(1, 1) == 2.0);
  CHECK(x2.coefficient(0, 2) == 1.0);
  CHECK(x2.coefficient(0, 0) == 1.0);
  CHECK(x2.size() == 4);

  const auto x4 = multiply(x2, x2);
  CHECK(matrix_element(x4, 0, 0) == doctest::Approx(3.0).epsilon(1e-14));
  const oracle::Matrix dense_x = oracle::dense(x, 10);
  const oracle::Matrix dense_x4 = dense_x * dense_x * dense_x * dense_x;
  CHECK(dense_x4(0, 0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("products agree with explicit truncated matrices") {
  std::mt19937_64 rng(20240611);
  constexpr int kDim = 40;
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_polynomial(rng, 4);
    const auto q = random_polynomial(rng, 4);
    const auto pq = multiply(p, q);
    // Entries reach ~1e6 here, so the reference product is formed in extended precision.
    const oracle::MatrixL expected = oracle::dense<oracle::MatrixL>(p, kDim) * oracle::dense<oracle::MatrixL>(q, kDim);
    long double worst = 0.0L;
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        worst = std::max(worst, std::abs(static_cast<long double>(matrix_element(pq, m, n)) - expected(m, n)));
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("field_power examples") {
  CHECK(field_power(0, ModeParameters(1.3, 0.7)).coefficient(0, 0) == 1.0);
  CHECK(field_power(0, ModeParameters(1.3, 0.7)).size() == 1);
  CHECK(expectation(field_power(2, ModeParameters(2.0)), 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(expectation(field_power(4, ModeParameters(1.0)), 0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("momentum_squared examples") {
  CHECK(expectation(momentum_squared(ModeParameters(1.0)), 0) == doctest::Approx(0.5));
  CHECK(expectation(momentum_squared(ModeParameters(2.0)), 1) == doctest::Approx(3.0));
  CHECK(matrix_element(momentum_squared(ModeParameters(1.0)), 2, 0) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  // Matrix representation of -(omega/2)(b^dagger - b)^2.
  const auto b = NormalOrderedPolynomial::annihilation();
  const auto bd = NormalOrderedPolynomial::creation();
  const oracle::Matrix d = oracle::dense(bd - b, 12);
  const oracle::Matrix p2 = -0.5 * 2.0 * d * d;
  for (int n = 0; n < 8; ++n) {
    CHECK(expectation(momentum_squared(ModeParameters(2.0)), n) ==
          doctest::Approx(p2(n, n)).epsilon(1e-13));
  }
}

TEST_CASE("matrix_element examples") {
  CHECK(matrix_element(field(1.0), 1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const auto phi4 = field_power(4, ModeParameters(2.0));
  CHECK(matrix_element(phi4, 4, 0) == doctest::Approx(std::sqrt(6.0) / 8.0).epsilon(1e-14));
  CHECK(matrix_element(phi4, 2, 0) == doctest::Approx(3.0 * std::sqrt(2.0) / 8.0).epsilon(1e-14));
  CHECK(matrix_element(phi4, 5, 0) == 0.0);
  CHECK(matrix_element(phi4, 0, 9) == 0.0);
}

TEST_CASE("matrix elements stay finite at large occupation") {
  const auto phi8 = field_power(8, ModeParameters(1.0));
  const double diag = expectation(phi8, 150);
  CHECK(std::isfinite(diag));
  CHECK(diag > 0.0);
  CHECK(std::isfinite(matrix_element(phi8, 158, 150)));
}

TEST_CASE("expectation examples") {
  CHECK(expectation(field_power(3, ModeParameters(1.0, 1.0)), 0) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(expectation(field_power(4, ModeParameters(2.0, 1.0)), 0) == doctest::Approx(2.6875).epsilon(1e-14));
  for (const double omega : {0.3, 1.0, 7.5}) {
    for (std::uint64_t n : {0u, 1u, 5u, 30u}) {
      CHECK(expectation(field_power(1, ModeParameters(omega, -0.4)), n) == doctest::Approx(-0.4));
    }
  }
}

TEST_CASE("hermiticity of self-adjoint constructions") {
  const ModeParameters mode(1.7, 0.35);
  std::vector<NormalOrderedPolynomial> ops{momentum_squared(mode)};
  for (std::uint32_t p = 1; p <= 8; ++p) ops.push_back(field_power(p, mode));
  for (const auto& op : ops) {
    double worst = 0.0;
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        const double a = matrix_element(op, m, n);
        worst = std::max(worst, std::abs(a - matrix_element(op, n, m)) / std::max(1.0, std::abs(a)));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("band structure of field powers") {
  for (std::uint32_t p = 1; p <= 8; ++p) {
    const auto shifted = field_power(p, ModeParameters(1.3, 0.8));
    const auto centered = field_power(p, ModeParameters(1.3));
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        const int gap = std::abs(m - n);
        if (gap > static_cast<int>(p)) {
          CHECK(matrix_element(shifted, m, n) == 0.0);
        }
        if (gap > static_cast<int>(p) || (gap % 2) != static_cast<int>(p % 2)) {
          CHECK(matrix_element(centered, m, n) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("quantum averages match the closed forms") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sigma_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> log_omega(std::log(0.05), std::log(20.0));
  std::uniform_int_distribution<int> level(0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const double sigma = sigma_dist(rng);
    const double omega = std::exp(log_omega(rng));
    const int n = level(rng);
    const double xi = n + 0.5;
    const ModeParameters mode(omega, sigma);
    const double phi2 = sigma * sigma + xi / omega;
    const double phi3 = sigma * sigma * sigma + 3.0 * sigma * xi / omega;
    const double phi4 = std::pow(sigma, 4) + 6.0 * sigma * sigma * xi / omega +
                        3.0 * (1.0 + 4.0 * xi * xi) / (8.0 * omega * omega);
    CHECK(expectation(field_power(2, mode), n) == doctest::Approx(phi2).epsilon(1e-12));
    if (std::abs(phi3) > 1e-6) {
      CHECK(expectation(field_power(3, mode), n) == doctest::Approx(phi3).epsilon(1e-12));
    }
    CHECK(expectation(field_power(4, mode), n) == doctest::Approx(phi4).epsilon(1e-12));
  }
}
