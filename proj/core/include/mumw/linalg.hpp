#pragma once

// Dense complex matrix foundation. Every downstream module works with
// Eigen's dynamic matrices through these aliases; all functions here are
// pure and return new values.

#include <complex>

#include <Eigen/Dense>

#include "mumw/error.hpp"

namespace mumw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-10;

/// A d^2 x d^2 operator on C^d (x) C^d. Row index (i, j) maps to i*d + j,
/// i.e. the first tensor factor is the slow index.
class BipartiteOperator {
 public:
  BipartiteOperator(ComplexMatrix matrix, int dim);

  /// Verifies ||M - M^dagger||_max <= tol and sets the Hermitian flag.
  static BipartiteOperator hermitian(ComplexMatrix matrix, int dim, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return dim_; }
  bool is_hermitian() const noexcept { return hermitian_; }

 private:
  ComplexMatrix matrix_;
  int dim_;
  bool hermitian_ = false;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are orthonormal eigenvectors
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes every d x d block (transposition on the second factor).
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim);
BipartiteOperator partial_transpose(const BipartiteOperator& w);

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);
RealVector hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);
double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultTol);

/// True iff the smallest eigenvalue is >= -tol. Throws on non-Hermitian input.
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Hilbert-Schmidt pairing Tr(A^dagger B).
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_residual(const ComplexMatrix& m);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
ComplexMatrix project_psd(const ComplexMatrix& m);

ComplexMatrix identity(int n);
/// |i><j| in dimension d.
ComplexMatrix matrix_unit(int d, int i, int j);
/// |v><v|
ComplexMatrix outer(const ComplexVector& v);
/// P_+ = (1/d) sum_ij |i><j| (x) |i><j|
ComplexMatrix max_entangled_projector(int d);
/// The flip operator sum_ij |i><j| (x) |j><i|.
ComplexMatrix swap_operator(int d);

/// Integer square root of n if n is a perfect square, otherwise -1.
int exact_sqrt(Eigen::Index n);

}  // namespace mumw
