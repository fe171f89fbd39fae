#pragma once

// Real orthogonal d x d matrices O with O n = sign * n, n = (1,...,1)/sqrt(d).

#include <cstdint>
#include <string>
#include <string_view>

#include "mumw/linalg.hpp"

namespace mumw {

class StarRotation {
 public:
  /// Validates orthogonality and O n = sign n to `tol`.
  StarRotation(RealMatrix entries, int sign, std::string descriptor = "custom", double tol = kDefaultTol);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const RealMatrix& matrix() const noexcept { return entries_; }
  double operator()(int k, int l) const { return entries_(k, l); }
  int sign() const noexcept { return sign_; }
  const std::string& descriptor() const noexcept { return descriptor_; }

 private:
  RealMatrix entries_;
  int sign_;
  std::string descriptor_;
};

RealVector star_vector(int d);

/// Orthogonal V whose first column is n, completed by Gram-Schmidt over e_1, e_2, ...
RealMatrix star_completion_basis(int d);

StarRotation identity_rotation(int d);

/// S^(r)|i> = |i+r mod d>.
StarRotation permutation_rotation(int d, int r);

/// O = V diag(sign, block) V^T for an orthogonal (d-1) x (d-1) block.
StarRotation householder_rotation(int d, const RealMatrix& block, int sign);

/// As above with a Haar-random block drawn from `seed`.
StarRotation householder_rotation(int d, std::uint64_t seed, int sign);

/// Product a * b (sign multiplies).
StarRotation compose(const StarRotation& a, const StarRotation& b);

/// Parses "id", "perm:r", "haar:seed" or "haar-neg:seed".
StarRotation parse_rotation(std::string_view descriptor, int d);

struct RotationReport {
  double orthogonality_residual = 0.0;  // ||O^T O - I||_max
  double star_residual = 0.0;           // ||O n - sign n||_inf
  double row_sum_residual = 0.0;        // max_k |sum_l O_kl - sign|
  double column_sum_residual = 0.0;     // max_l |sum_k O_kl - sign|
  int sign = 1;

  bool pass(double tol = kDefaultTol) const {
    return orthogonality_residual <= tol && star_residual <= tol && row_sum_residual <= tol &&
           column_sum_residual <= tol;
  }
};

/// Residuals of an arbitrary matrix against the star-rotation structure for `sign`.
RotationReport verify_rotation(const RealMatrix& o, int sign);
RotationReport verify_rotation(const StarRotation& o);

}  // namespace mumw
