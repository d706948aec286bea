#pragma once

// Reference computations used only by the tests. None of them route through the
// library code they check.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "gha/ladder_algebra.hpp"

namespace oracle {

using Matrix = Eigen::MatrixXd;
using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// Truncated matrix of b on {|0>, ..., |N-1>}.
template <typename M = Matrix>
M lowering(int dim) {
  using Scalar = typename M::Scalar;
  M b = M::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(static_cast<Scalar>(n));
  return b;
}

/// Dense matrix of a normal-ordered polynomial built from explicit matrix powers.
/// Entries with m + i >= dim or n + j >= dim are truncation-exact only for
/// indices well below dim.
template <typename M = Matrix>
M dense(const gha::NormalOrderedPolynomial& poly, int dim) {
  using Scalar = typename M::Scalar;
  const M b = lowering<M>(dim);
  const M bd = b.transpose();
  M out = M::Zero(dim, dim);
  for (const auto& [key, coefficient] : poly.terms()) {
    M term = M::Identity(dim, dim);
    for (std::uint32_t i = 0; i < key.first; ++i) term = term * bd;
    for (std::uint32_t j = 0; j < key.second; ++j) term = term * b;
    out += static_cast<Scalar>(coefficient) * term;
  }
  return out;
}

/// K_1(x) = int_0^inf exp(-x cosh t) cosh t dt.
inline double k1_integral(double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  // Factor out exp(-x) so the integrand stays O(1) for large x.
  const auto f = [x](double t) {
    const double c = std::cosh(t);
    return std::isfinite(c) ? std::exp(-x * (c - 1.0)) * c : 0.0;
  };
  return std::exp(-x) * integrator.integrate(f, 1e-14);
}

/// (1 / 4 pi^2) int_0^cutoff k^2 (k^2 + M2)^((2n - 1)/2) dk by adaptive Gauss-Kronrod.
inline double stevenson_quadrature(int n, double M2, double cutoff) {
  const double exponent = (2.0 * n - 1.0) / 2.0;
  const auto f = [=](double k) { return k * k * std::pow(k * k + M2, exponent); };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, cutoff, 20, 1e-14);
  return integral / (4.0 * std::numbers::pi * std::numbers::pi);
}

/// (1 / 4 pi^2 r) int_0^inf k sin(kr) / sqrt(k^2 + m^2) dk, taken in the Abel sense.
/// Two integrations by parts turn it into the absolutely convergent
///   (m^2 / 4 pi^2 r^2) int_0^inf cos(kr) (k^2 + m^2)^(-3/2) dk.
inline double static_potential_fourier(double r, double m) {
  boost::math::quadrature::ooura_fourier_cos<double> integrator(1e-14, 12);
  const auto f = [m](double k) { return std::pow(k * k + m * m, -1.5); };
  const auto [value, error] = integrator.integrate(f, r);
  (void)error;
  return m * m * value / (4.0 * std::numbers::pi * std::numbers::pi * r * r);
}

/// Lowest `count` eigenvalues of -u''/2 + V(x) u on [-half_width, half_width] with
/// Dirichlet walls, three-point differences on `points` interior nodes, followed by
/// one Richardson step (h and h/2).
inline std::vector<double> finite_difference_levels(const std::function<double(double)>& potential,
                                                    double half_width, int points, int count) {
  const auto solve = [&](int nodes) {
    const double h = 2.0 * half_width / (nodes + 1);
    Eigen::VectorXd diag(nodes);
    Eigen::VectorXd off = Eigen::VectorXd::Constant(nodes - 1, -0.5 / (h * h));
    for (int i = 0; i < nodes; ++i) diag(i) = 1.0 / (h * h) + potential(-half_width + (i + 1) * h);
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    return Eigen::VectorXd(solver.eigenvalues().head(count));
  };
  const Eigen::VectorXd coarse = solve(points);
  const Eigen::VectorXd fine = solve(2 * points + 1);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = (4.0 * fine(i) - coarse(i)) / 3.0;
  return out;
}

}  // namespace oracle
