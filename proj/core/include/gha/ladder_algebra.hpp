#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace gha {

/// Frequency and shift of the ladder basis used to expand the field:
///   phi = sigma + (b + b^dagger) / sqrt(2 omega),  p = i sqrt(omega/2) (b^dagger - b).
class ModeParameters {
 public:
  explicit ModeParameters(double omega, double sigma = 0.0);

  double omega() const { return omega_; }
  double sigma() const { return sigma_; }

 private:
  double omega_;
  double sigma_;
};

/// Polynomial in a single bosonic mode (b, b^dagger), [b, b^dagger] = 1, kept in
/// normal-ordered form: sum over (i, j) of c_ij (b^dagger)^i b^j.
///
/// At most one coefficient per (i, j); coefficients with magnitude below
/// kDropThreshold are removed on insertion.
class NormalOrderedPolynomial {
 public:
  /// (dagger power, lower power)
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using TermMap = std::map<Key, double>;

  static constexpr double kDropThreshold = 1e-300;

  NormalOrderedPolynomial() = default;

  static NormalOrderedPolynomial constant(double value);
  static NormalOrderedPolynomial monomial(std::uint32_t dagger_power, std::uint32_t lower_power,
                                          double coefficient = 1.0);
  static NormalOrderedPolynomial annihilation() { return monomial(0, 1); }
  static NormalOrderedPolynomial creation() { return monomial(1, 0); }

  const TermMap& terms() const { return terms_; }
  double coefficient(std::uint32_t dagger_power, std::uint32_t lower_power) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// max(i + j) over stored terms; 0 for the empty polynomial.
  std::uint32_t degree() const;

  NormalOrderedPolynomial& operator+=(const NormalOrderedPolynomial& other);
  NormalOrderedPolynomial& operator-=(const NormalOrderedPolynomial& other);
  NormalOrderedPolynomial& operator*=(double scale);

  friend NormalOrderedPolynomial operator+(NormalOrderedPolynomial lhs,
                                           const NormalOrderedPolynomial& rhs) {
    return lhs += rhs;
  }
  friend NormalOrderedPolynomial operator-(NormalOrderedPolynomial lhs,
                                           const NormalOrderedPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend NormalOrderedPolynomial operator*(NormalOrderedPolynomial poly, double scale) {
    return poly *= scale;
  }
  friend NormalOrderedPolynomial operator*(double scale, NormalOrderedPolynomial poly) {
    return poly *= scale;
  }
  friend NormalOrderedPolynomial operator*(const NormalOrderedPolynomial& lhs,
                                           const NormalOrderedPolynomial& rhs);

  void add_term(std::uint32_t dagger_power, std::uint32_t lower_power, double coefficient);

 private:
  TermMap terms_;
};

/// Normal-ordered form of the operator product lhs * rhs.
NormalOrderedPolynomial multiply(const NormalOrderedPolynomial& lhs,
                                 const NormalOrderedPolynomial& rhs);

/// (sigma + (b + b^dagger)/sqrt(2 omega))^power
NormalOrderedPolynomial field_power(std::uint32_t power, const ModeParameters& mode);

/// p^2 = -(omega/2) (b^dagger - b)^2
NormalOrderedPolynomial momentum_squared(const ModeParameters& mode);

/// <m| poly |n> in the number basis of b^dagger b.
double matrix_element(const NormalOrderedPolynomial& poly, std::uint64_t m, std::uint64_t n);

/// <n| poly |n>
double expectation(const NormalOrderedPolynomial& poly, std::uint64_t n);

}  // namespace gha
