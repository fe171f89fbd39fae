#include "mumw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mumw {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": matrix must be square and non-empty, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  require_square(m, what);
  const double res = hermiticity_residual(m);
  if (!(res <= tol)) {
    throw PreconditionError(std::string(what) + ": input is not Hermitian (||M - M^dagger||_max = " +
                            std::to_string(res) + ")");
  }
}

void require_bipartite(const ComplexMatrix& m, int dim, const char* what) {
  if (dim < 1 || m.rows() != Eigen::Index(dim) * dim || m.cols() != m.rows()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected d^2 x d^2 with d = " +
                         std::to_string(dim));
  }
}

}  // namespace

BipartiteOperator::BipartiteOperator(ComplexMatrix matrix, int dim)
    : matrix_(std::move(matrix)), dim_(dim) {
  require_bipartite(matrix_, dim_, "BipartiteOperator");
}

BipartiteOperator BipartiteOperator::hermitian(ComplexMatrix matrix, int dim, double tol) {
  BipartiteOperator op(std::move(matrix), dim);
  require_hermitian(op.matrix_, tol, "BipartiteOperator::hermitian");
  op.hermitian_ = true;
  return op;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim) {
  require_bipartite(m, dim, "partial_transpose");
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out.block(i * dim, j * dim, dim, dim) = m.block(i * dim, j * dim, dim, dim).transpose();
    }
  }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& w) {
  BipartiteOperator out(partial_transpose(w.matrix(), w.dim()), w.dim());
  if (w.is_hermitian()) {
    // Block transposition maps Hermitian operators to Hermitian operators exactly.
    const double tol = std::max(kDefaultTol, hermiticity_residual(w.matrix()));
    return BipartiteOperator::hermitian(out.matrix(), w.dim(), tol);
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  require_hermitian(m, tol, "hermitian_eig");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  require_hermitian(m, tol, "hermitian_eigenvalues");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m, double tol) {
  return hermitian_eigenvalues(m, tol).minCoeff();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  return min_eigenvalue(m, std::max(tol, kDefaultTol)) >= -tol;
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError("trace_inner: operands must be square with equal dimensions");
  }
  return (a.conjugate().cwiseProduct(b)).sum();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: incompatible dimensions");
  }
  return (a.cwiseProduct(b.transpose())).sum();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: operand shapes differ");
  }
  return max_abs(a - b);
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermiticity_residual: matrix must be square");
  }
  return max_abs(m - m.adjoint());
}

ComplexMatrix project_psd(const ComplexMatrix& m) {
  require_square(m, "project_psd");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const RealVector clipped = solver.eigenvalues().cwiseMax(0.0);
  const auto& v = solver.eigenvectors();
  return v * clipped.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix matrix_unit(int d, int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix max_entangled_projector(int d) {
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      p(i * d + i, j * d + j) = 1.0 / d;
    }
  }
  return p;
}

ComplexMatrix swap_operator(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      s(i * d + j, j * d + i) = 1.0;
    }
  }
  return s;
}

int exact_sqrt(Eigen::Index n) {
  if (n < 0) return -1;
  const auto r = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? static_cast<int>(r) : -1;
}

}  // namespace mumw
