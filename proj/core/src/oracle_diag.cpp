#include "gha/oracle_diag.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "gha/errors.hpp"

namespace gha {

TruncatedBasis::TruncatedBasis(std::size_t dimension, double basis_frequency)
    : dimension_(dimension), basis_frequency_(basis_frequency) {
  if (dimension < 16) {
    throw DomainError("TruncatedBasis: dimension must be at least 16");
  }
  if (!(basis_frequency > 0.0) || !std::isfinite(basis_frequency)) {
    throw DomainError("TruncatedBasis: basis frequency must be positive");
  }
}

namespace {

// Rows/columns `first, first + stride, ...` below `dimension`.
SymmetricMatrix banded_matrix(const NormalOrderedPolynomial& hamiltonian, std::size_t dimension,
                              std::size_t first, std::size_t stride) {
  const std::size_t size = first < dimension ? (dimension - first + stride - 1) / stride : 0;
  SymmetricMatrix out(size);
  const std::size_t band = hamiltonian.degree();
  for (std::size_t r = 0; r < size; ++r) {
    const std::size_t m = first + r * stride;
    for (std::size_t c = r; c < size; ++c) {
      const std::size_t n = first + c * stride;
      if (n - m > band) break;
      out.set(r, c, matrix_element(hamiltonian, m, n));
    }
  }
  return out;
}

Eigen::MatrixXd to_eigen(const SymmetricMatrix& matrix) {
  const auto size = static_cast<Eigen::Index>(matrix.size());
  Eigen::MatrixXd dense(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      dense(r, c) = matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  return dense;
}

}  // namespace

SymmetricMatrix hamiltonian_matrix(const NormalOrderedPolynomial& hamiltonian,
                                   std::size_t dimension) {
  return banded_matrix(hamiltonian, dimension, 0, 1);
}

SymmetricMatrix hamiltonian_matrix(const OscillatorModel& model, const TruncatedBasis& basis) {
  return hamiltonian_matrix(full_hamiltonian(model, ModeParameters(basis.basis_frequency())),
                            basis.dimension());
}

std::vector<double> eigenvalues(const SymmetricMatrix& matrix) {
  if (matrix.size() == 0) return {};
  // Oscillator Hamiltonians are strongly graded (the diagonal grows like n^(power/2)),
  // and a normwise-stable solver loses the low levels to eps * max|E|. Extended
  // precision moves that floor well below the convergence tolerances in use.
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const MatrixL extended = to_eigen(matrix).cast<long double>();
  Eigen::SelfAdjointEigenSolver<MatrixL> solver(extended, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("eigenvalues: symmetric eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(values(i));
  return out;
}

EigenSystem eigensystem(const SymmetricMatrix& matrix) {
  EigenSystem out;
  if (matrix.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(matrix));
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("eigensystem: symmetric eigensolver did not converge");
  }
  const auto size = solver.eigenvalues().size();
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + size);
  out.vectors.resize(static_cast<std::size_t>(size));
  for (Eigen::Index k = 0; k < size; ++k) {
    const auto column = solver.eigenvectors().col(k);
    out.vectors[static_cast<std::size_t>(k)].assign(column.data(), column.data() + size);
  }
  return out;
}

std::vector<double> truncated_spectrum(const OscillatorModel& model, const TruncatedBasis& basis,
                                       bool exploit_parity) {
  const NormalOrderedPolynomial hamiltonian =
      full_hamiltonian(model, ModeParameters(basis.basis_frequency()));
  if (!exploit_parity) {
    return eigenvalues(banded_matrix(hamiltonian, basis.dimension(), 0, 1));
  }
  // With sigma = 0 the Hamiltonian only couples levels of equal parity.
  std::vector<double> levels = eigenvalues(banded_matrix(hamiltonian, basis.dimension(), 0, 2));
  const std::vector<double> odd = eigenvalues(banded_matrix(hamiltonian, basis.dimension(), 1, 2));
  levels.insert(levels.end(), odd.begin(), odd.end());
  std::sort(levels.begin(), levels.end());
  return levels;
}

SpectrumEstimate converged_levels(const OscillatorModel& model, std::size_t n_max, double tol,
                                  const OracleOptions& options) {
  if (!(tol >= 1e-10)) {
    throw DomainError("converged_levels: tol must be >= 1e-10");
  }
  const double frequency =
      options.basis_frequency.value_or(solve_level(model, static_cast<std::uint32_t>(n_max)).omega);

  std::size_t dimension = std::max<std::size_t>(options.start_dimension, 32);
  while (dimension / 2 < 2 * (n_max + 1) + 16) dimension *= 2;
  if (dimension > options.max_dimension) {
    throw BudgetExceeded("converged_levels: requested levels need N > " +
                         std::to_string(options.max_dimension));
  }

  std::vector<double> previous =
      truncated_spectrum(model, TruncatedBasis(dimension / 2, frequency), options.exploit_parity);
  while (true) {
    std::vector<double> current =
        truncated_spectrum(model, TruncatedBasis(dimension, frequency), options.exploit_parity);
    SpectrumEstimate estimate;
    estimate.dimension_used = dimension;
    estimate.basis_frequency = frequency;
    bool converged = true;
    for (std::size_t i = 0; i <= n_max; ++i) {
      const double change = std::abs(current[i] - previous[i]);
      estimate.levels.push_back(current[i]);
      estimate.convergence_error.push_back(change);
      if (!(change < tol * std::max(1.0, std::abs(current[i])))) converged = false;
    }
    if (converged) return estimate;
    dimension *= 2;
    if (dimension > options.max_dimension) {
      throw BudgetExceeded("converged_levels: no convergence up to N = " +
                           std::to_string(options.max_dimension));
    }
    previous = std::move(current);
  }
}

}  // namespace gha
