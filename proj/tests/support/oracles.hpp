#pragma once

// Independent reference computations for the tests. Everything here is
// written with plain loops or scalar searches so that it shares no code
// path with the library routine it checks.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "mumw/linalg.hpp"

namespace oracle {

using mumw::Complex;
using mumw::ComplexMatrix;
using mumw::ComplexVector;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// <i j|M^Gamma|k l> = <i l|M|k j>
inline ComplexMatrix partial_transpose(const ComplexMatrix& m, int d) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i * d + j, k * d + l) = m(i * d + l, k * d + j);
  return out;
}

// Smallest root of the sharpness relation found by bisection on t >= 0.
inline double bisect_t(int d, double kappa) {
  const double sd = std::sqrt(static_cast<double>(d));
  auto f = [&](double t) { return 1.0 / d + (d - 1) * t * t * (1 + sd) * (1 + sd) - kappa; };
  double lo = 0.0, hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Largest t with min_eig(I/d + t F) >= 0 for every F, by bisection on feasibility.
inline double bisect_t_max(const std::vector<ComplexMatrix>& fs, int d) {
  auto feasible = [&](double t) {
    for (const auto& f : fs) {
      const ComplexMatrix p = ComplexMatrix::Identity(d, d) / static_cast<double>(d) + t * f;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < 0.0) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Qubit pure state from Bloch angles.
inline ComplexVector bloch(double theta, double phi) {
  ComplexVector v(2);
  v(0) = std::cos(theta / 2);
  v(1) = std::polar(std::sin(theta / 2), phi);
  return v;
}

// Minimum of <a b|W|a b> over a Bloch-angle grid (d = 2).
inline double product_grid_min(const ComplexMatrix& w, int steps) {
  double best = 1e300;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j < 2 * steps; ++j)
      for (int k = 0; k <= steps; ++k)
        for (int l = 0; l < 2 * steps; ++l) {
          const double pi = std::numbers::pi;
          const ComplexVector a = bloch(pi * i / steps, pi * j / steps);
          const ComplexVector b = bloch(pi * k / steps, pi * l / steps);
          ComplexVector ab(4);
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) ab(2 * x + y) = a(x) * b(y);
          best = std::min(best, (ab.adjoint() * w * ab)(0, 0).real());
        }
  return best;
}

// Reduction map X -> (I Tr X - X)/(d - 1).
inline ComplexMatrix reduction_map(const ComplexMatrix& x) {
  const auto d = x.rows();
  return (ComplexMatrix::Identity(d, d) * x.trace() - x) / static_cast<double>(d - 1);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
