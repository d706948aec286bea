#include "gha/ladder_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gha/errors.hpp"

namespace gha {

ModeParameters::ModeParameters(double omega, double sigma) : omega_(omega), sigma_(sigma) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("ModeParameters: omega must be positive and finite, got " +
                      std::to_string(omega));
  }
}

NormalOrderedPolynomial NormalOrderedPolynomial::constant(double value) {
  return monomial(0, 0, value);
}

NormalOrderedPolynomial NormalOrderedPolynomial::monomial(std::uint32_t dagger_power,
                                                          std::uint32_t lower_power,
                                                          double coefficient) {
  NormalOrderedPolynomial poly;
  poly.add_term(dagger_power, lower_power, coefficient);
  return poly;
}

double NormalOrderedPolynomial::coefficient(std::uint32_t dagger_power,
                                            std::uint32_t lower_power) const {
  auto it = terms_.find({dagger_power, lower_power});
  return it == terms_.end() ? 0.0 : it->second;
}

std::uint32_t NormalOrderedPolynomial::degree() const {
  std::uint32_t result = 0;
  for (const auto& [key, value] : terms_) {
    result = std::max(result, key.first + key.second);
  }
  return result;
}

void NormalOrderedPolynomial::add_term(std::uint32_t dagger_power, std::uint32_t lower_power,
                                       double coefficient) {
  const Key key{dagger_power, lower_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(coefficient) >= kDropThreshold) {
      terms_.emplace(key, coefficient);
    }
    return;
  }
  it->second += coefficient;
  if (std::abs(it->second) < kDropThreshold) {
    terms_.erase(it);
  }
}

NormalOrderedPolynomial& NormalOrderedPolynomial::operator+=(const NormalOrderedPolynomial& other) {
  for (const auto& [key, value] : other.terms_) {
    add_term(key.first, key.second, value);
  }
  return *this;
}

NormalOrderedPolynomial& NormalOrderedPolynomial::operator-=(const NormalOrderedPolynomial& other) {
  for (const auto& [key, value] : other.terms_) {
    add_term(key.first, key.second, -value);
  }
  return *this;
}

NormalOrderedPolynomial& NormalOrderedPolynomial::operator*=(double scale) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < kDropThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
  double result = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

// sqrt(n! / (n - k)!) for k <= n, built up one factor at a time.
long double sqrt_falling_factorial(std::uint64_t n, std::uint32_t k) {
  long double result = 1.0L;
  for (std::uint32_t t = 0; t < k; ++t) {
    result *= std::sqrt(static_cast<long double>(n - t));
  }
  return result;
}

}  // namespace

NormalOrderedPolynomial multiply(const NormalOrderedPolynomial& lhs,
                                 const NormalOrderedPolynomial& rhs) {
  // (b^+)^i b^j (b^+)^k b^l, with
  //   b^j (b^+)^k = sum_r C(j,r) C(k,r) r! (b^+)^(k-r) b^(j-r).
  NormalOrderedPolynomial result;
  for (const auto& [lkey, lcoef] : lhs.terms()) {
    const auto [i, j] = lkey;
    for (const auto& [rkey, rcoef] : rhs.terms()) {
      const auto [k, l] = rkey;
      double r_factorial = 1.0;
      for (std::uint32_t r = 0; r <= std::min(j, k); ++r) {
        if (r > 0) r_factorial *= static_cast<double>(r);
        const double weight = binomial(j, r) * binomial(k, r) * r_factorial;
        result.add_term(i + k - r, j + l - r, lcoef * rcoef * weight);
      }
    }
  }
  return result;
}

NormalOrderedPolynomial operator*(const NormalOrderedPolynomial& lhs,
                                  const NormalOrderedPolynomial& rhs) {
  return multiply(lhs, rhs);
}

NormalOrderedPolynomial field_power(std::uint32_t power, const ModeParameters& mode) {
  const double scale = 1.0 / std::sqrt(2.0 * mode.omega());
  NormalOrderedPolynomial field = NormalOrderedPolynomial::constant(mode.sigma());
  field.add_term(1, 0, scale);
  field.add_term(0, 1, scale);

  // Square-and-multiply keeps the number of products logarithmic in power.
  NormalOrderedPolynomial result = NormalOrderedPolynomial::constant(1.0);
  NormalOrderedPolynomial base = field;
  for (std::uint32_t e = power; e > 0; e >>= 1) {
    if (e & 1u) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return result;
}

NormalOrderedPolynomial momentum_squared(const ModeParameters& mode) {
  // (b^+ - b)^2 = b^+b^+ - 2 b^+b - 1 + bb
  const double half_omega = 0.5 * mode.omega();
  NormalOrderedPolynomial p2;
  p2.add_term(2, 0, -half_omega);
  p2.add_term(1, 1, 2.0 * half_omega);
  p2.add_term(0, 0, half_omega);
  p2.add_term(0, 2, -half_omega);
  return p2;
}

double matrix_element(const NormalOrderedPolynomial& poly, std::uint64_t m, std::uint64_t n) {
  // <m| (b^+)^i b^j |n> = delta(m - i, n - j) sqrt(n!/(n-j)!) sqrt(m!/(m-i)!)
  const auto shift = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n);
  if (static_cast<std::uint64_t>(std::abs(shift)) > poly.degree()) return 0.0;
  // Extended precision keeps the sum of large, partly cancelling terms accurate.
  long double sum = 0.0L;
  for (const auto& [key, coef] : poly.terms()) {
    const auto [i, j] = key;
    if (static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j) != shift) continue;
    if (j > n || i > m) continue;
    sum += static_cast<long double>(coef) * sqrt_falling_factorial(n, j) * sqrt_falling_factorial(m, i);
  }
  return static_cast<double>(sum);
}

double expectation(const NormalOrderedPolynomial& poly, std::uint64_t n) {
  return matrix_element(poly, n, n);
}

}  // namespace gha
