// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SQKD_QUANTUM_MATH_HPP
#define SQKD_QUANTUM_MATH_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sqkd/tolerances.hpp"

namespace sqkd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// max-entry deviation of U†U from the identity
double unitarity_deviation(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kStructuralTol);

/// Nonnegative weights summing to one. Construction validates.
struct ProbabilityDistribution {
  std::vector<double> weights;

  static ProbabilityDistribution from_weights(std::vector<double> weights,
                                              double tol = kStructuralTol);
};

/// Hermitian, positive semi-definite, unit-trace operator.
/// from_matrix validates all three properties and throws on violation.
struct DensityOperator {
  ComplexMatrix matrix;

  int dimension() const { return static_cast<int>(matrix.rows()); }

  static DensityOperator from_matrix(ComplexMatrix m, double tol = kStructuralTol);
};

// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log2 0 = 0.
// Throws std::domain_error outside [-1e-12, 1+1e-12]; values inside the
// tolerance band are clamped to [0, 1].
double binary_entropy(double x);

// H(p1..pn) = -sum p_i log2 p_i
double shannon_entropy(const ProbabilityDistribution& d);

// Shannon entropy of the eigenvalue spectrum. Eigenvalues in [-1e-9, 0)
// are clamped to zero and the spectrum renormalized.
double von_neumann_entropy(const DensityOperator& rho);

// Reduced operator on the kept factors of a tensor-product space.
// `dims` are the factor dimensions (their product must equal the operator
// dimension); `keep` lists factor indices to retain, in ascending order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& dims,
                              const std::vector<int>& keep);

// S(X|Y) = S(XY) - S(Y) on a dim_x * dim_y space (X is the first factor).
double conditional_entropy(const DensityOperator& rho_xy, int dim_x, int dim_y);

// Kronecker product.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Unitary drawn by QR-orthonormalizing a matrix of iid standard complex
// Gaussians (R-diagonal phases folded back in). Deterministic per seed.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

}  // namespace sqkd

#endif
