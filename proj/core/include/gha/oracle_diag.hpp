#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gha/hartree.hpp"
#include "gha/ladder_algebra.hpp"

namespace gha {

/// Truncated harmonic-oscillator basis {|0>, ..., |N-1>} at a given frequency.
class TruncatedBasis {
 public:
  TruncatedBasis(std::size_t dimension, double basis_frequency);

  std::size_t dimension() const { return dimension_; }
  double basis_frequency() const { return basis_frequency_; }

 private:
  std::size_t dimension_;
  double basis_frequency_;
};

/// Dense symmetric matrix, row-major storage.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t size) : size_(size), data_(size * size, 0.0) {}

  std::size_t size() const { return size_; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }
  /// Writes both (row, col) and (col, row).
  void set(std::size_t row, std::size_t col, double value) {
    data_[row * size_ + col] = value;
    data_[col * size_ + row] = value;
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t size_;
  std::vector<double> data_;
};

struct EigenSystem {
  std::vector<double> values;                ///< ascending
  std::vector<std::vector<double>> vectors;  ///< vectors[i] belongs to values[i]
};

struct SpectrumEstimate {
  std::vector<double> levels;             ///< ascending, levels 0..n_max
  std::size_t dimension_used = 0;         ///< total basis dimension N
  std::vector<double> convergence_error;  ///< |E_i(N) - E_i(N/2)|
  double basis_frequency = 1.0;
};

struct OracleOptions {
  std::size_t start_dimension = 64;
  std::size_t max_dimension = 4096;
  /// Defaults to the Hartree frequency of level n_max.
  std::optional<double> basis_frequency;
  /// Diagonalize the even and odd sectors separately.
  bool exploit_parity = true;
};

/// H_mn = <m| hamiltonian |n> for m, n < dimension.
SymmetricMatrix hamiltonian_matrix(const NormalOrderedPolynomial& hamiltonian, std::size_t dimension);

/// Same, for the model Hamiltonian p^2/2 + g phi^2/2 + lambda phi^power (sigma = 0).
SymmetricMatrix hamiltonian_matrix(const OscillatorModel& model, const TruncatedBasis& basis);

/// All eigenvalues in ascending order.
std::vector<double> eigenvalues(const SymmetricMatrix& matrix);

EigenSystem eigensystem(const SymmetricMatrix& matrix);

/// Eigenvalues of the model in a fixed truncated basis (parity-split when requested).
std::vector<double> truncated_spectrum(const OscillatorModel& model, const TruncatedBasis& basis,
                                       bool exploit_parity = true);

/// Doubles N until levels 0..n_max change by less than tol * max(1, |E|).
SpectrumEstimate converged_levels(const OscillatorModel& model, std::size_t n_max, double tol,
                                  const OracleOptions& options = {});

}  // namespace gha
