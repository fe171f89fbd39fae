#include "mumw/rotations.hpp"

#include <charconv>
#include <cmath>

#include "mumw/random.hpp"

namespace mumw {

StarRotation::StarRotation(RealMatrix entries, int sign, std::string descriptor, double tol)
    : entries_(std::move(entries)), sign_(sign), descriptor_(std::move(descriptor)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DimensionError("StarRotation: matrix must be square");
  }
  if (sign_ != 1 && sign_ != -1) throw PreconditionError("StarRotation: sign must be +1 or -1");
  const auto report = verify_rotation(entries_, sign_);
  if (report.orthogonality_residual > tol) {
    throw PreconditionError("StarRotation: matrix is not orthogonal (residual " +
                            std::to_string(report.orthogonality_residual) + ")");
  }
  if (report.star_residual > tol) {
    throw PreconditionError("StarRotation: matrix does not map n* to sign*n* (residual " +
                            std::to_string(report.star_residual) + ")");
  }
}

RealVector star_vector(int d) { return RealVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))); }

RealMatrix star_completion_basis(int d) {
  RealMatrix v(d, d);
  v.col(0) = star_vector(d);
  int filled = 1;
  for (int e = 0; e < d && filled < d; ++e) {
    RealVector c = RealVector::Unit(d, e);
    for (int j = 0; j < filled; ++j) c -= v.col(j).dot(c) * v.col(j);
    const double n = c.norm();
    if (n < 1e-8) continue;  // dependent on what we have so far
    v.col(filled++) = c / n;
  }
  return v;
}

StarRotation identity_rotation(int d) {
  if (d < 1) throw PreconditionError("identity_rotation: d must be positive");
  return StarRotation(RealMatrix::Identity(d, d), 1, "id");
}

StarRotation permutation_rotation(int d, int r) {
  if (r < 0 || r >= d) {
    throw PreconditionError("permutation_rotation: shift r = " + std::to_string(r) + " must be in 0..d-1");
  }
  RealMatrix s = RealMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) s((i + r) % d, i) = 1.0;
  return StarRotation(std::move(s), 1, "perm:" + std::to_string(r));
}

StarRotation householder_rotation(int d, const RealMatrix& block, int sign) {
  if (d < 2) throw PreconditionError("householder_rotation: d must be >= 2");
  if (block.rows() != d - 1 || block.cols() != d - 1) {
    throw DimensionError("householder_rotation: block must be (d-1) x (d-1)");
  }
  const double res = (block.transpose() * block - RealMatrix::Identity(d - 1, d - 1)).cwiseAbs().maxCoeff();
  if (res > kDefaultTol) {
    throw PreconditionError("householder_rotation: block is not orthogonal (residual " + std::to_string(res) + ")");
  }
  if (sign != 1 && sign != -1) throw PreconditionError("householder_rotation: sign must be +1 or -1");
  RealMatrix inner = RealMatrix::Zero(d, d);
  inner(0, 0) = sign;
  inner.bottomRightCorner(d - 1, d - 1) = block;
  const RealMatrix v = star_completion_basis(d);
  return StarRotation(v * inner * v.transpose(), sign, "custom");
}

StarRotation householder_rotation(int d, std::uint64_t seed, int sign) {
  if (d < 2) throw PreconditionError("householder_rotation: d must be >= 2");
  auto rng = make_rng(seed, static_cast<std::uint64_t>(d));
  const RealMatrix block = haar_random_orthogonal(d - 1, rng);
  const auto o = householder_rotation(d, block, sign);
  return StarRotation(o.matrix(), sign, (sign > 0 ? "haar:" : "haar-neg:") + std::to_string(seed));
}

StarRotation compose(const StarRotation& a, const StarRotation& b) {
  if (a.dim() != b.dim()) throw DimensionError("compose: dimension mismatch");
  return StarRotation(a.matrix() * b.matrix(), a.sign() * b.sign(), a.descriptor() + "*" + b.descriptor(), 1e-9);
}

StarRotation parse_rotation(std::string_view descriptor, int d) {
  auto number_after = [&](std::string_view prefix) -> std::uint64_t {
    const auto digits = descriptor.substr(prefix.size());
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw PreconditionError("rotation descriptor '" + std::string(descriptor) + "': expected an integer after '" +
                              std::string(prefix) + "'");
    }
    return value;
  };
  if (descriptor == "id") return identity_rotation(d);
  if (descriptor.starts_with("perm:")) {
    const auto r = number_after("perm:");
    if (r >= static_cast<std::uint64_t>(d)) {
      throw PreconditionError("rotation descriptor '" + std::string(descriptor) + "': shift must be < d");
    }
    return permutation_rotation(d, static_cast<int>(r));
  }
  if (descriptor.starts_with("haar-neg:")) return householder_rotation(d, number_after("haar-neg:"), -1);
  if (descriptor.starts_with("haar:")) return householder_rotation(d, number_after("haar:"), 1);
  throw PreconditionError("unknown rotation descriptor '" + std::string(descriptor) +
                          "' (expected id, perm:r, haar:seed or haar-neg:seed)");
}

RotationReport verify_rotation(const RealMatrix& o, int sign) {
  RotationReport r;
  r.sign = sign;
  const int d = static_cast<int>(o.rows());
  r.orthogonality_residual = (o.transpose() * o - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  const RealVector n = star_vector(d);
  r.star_residual = (o * n - sign * n).cwiseAbs().maxCoeff();
  r.row_sum_residual = (o.rowwise().sum().array() - sign).abs().maxCoeff();
  r.column_sum_residual = (o.colwise().sum().array() - sign).abs().maxCoeff();
  return r;
}

RotationReport verify_rotation(const StarRotation& o) { return verify_rotation(o.matrix(), o.sign()); }

}  // namespace mumw
