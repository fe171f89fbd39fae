#include "mumw/witness.hpp"

#include <cmath>
#include <string>

namespace mumw {

namespace {

double sqrt_d(int d) { return std::sqrt(static_cast<double>(d)); }

void require_positive_sign(const StarRotation& o, const char* what) {
  if (o.sign() != 1) {
    throw PreconditionError(std::string(what) + ": rotation '" + o.descriptor() +
                            "' flips n*; maps and witnesses need sign +1 rotations");
  }
}

BipartiteOperator hermitian_result(ComplexMatrix m, int d) {
  const double tol = 1e-10 * std::max(1.0, max_abs(m));
  return BipartiteOperator::hermitian(std::move(m), d, tol);
}

}  // namespace

double WitnessSpec::depolarizing_weight() const noexcept { return dim() * kappa - 1.0 - N + 2.0 * L; }

void WitnessSpec::validate() const {
  const int d = dim();
  if (N < 0 || N > d + 1) throw PreconditionError("WitnessSpec: N = " + std::to_string(N) + " must be in 0..d+1");
  if (L < 0 || L > N) throw PreconditionError("WitnessSpec: L = " + std::to_string(L) + " must be in 0..N");
  if (static_cast<int>(rotations.size()) != N) {
    throw PreconditionError("WitnessSpec: expected " + std::to_string(N) + " rotations, got " +
                            std::to_string(rotations.size()));
  }
  for (const auto& o : rotations) {
    if (o.dim() != d) throw DimensionError("WitnessSpec: rotation dimension differs from basis dimension");
    require_positive_sign(o, "WitnessSpec");
  }
  if (!(d * kappa - 1.0 > 0.0)) {
    throw PreconditionError("WitnessSpec: kappa = " + std::to_string(kappa) +
                            " must exceed 1/d (d kappa - 1 = 0 makes the map undefined)");
  }
  if (enforce_positivity && kappa > 1.0 + 1e-12) {
    throw PreconditionError("WitnessSpec: kappa must be <= 1 under positivity semantics");
  }
}

WitnessSpec make_spec(HermitianBasis basis, int N, int L, double kappa, bool enforce_positivity) {
  const int d = basis.dim();
  std::vector<StarRotation> rotations(static_cast<std::size_t>(std::max(N, 0)), identity_rotation(d));
  return WitnessSpec{std::move(basis), N, L, kappa, std::move(rotations), enforce_positivity};
}

double ccnr_scale(int d) {
  const double s = sqrt_d(d) + 1.0;
  return d * s * s;
}

double wtilde_over_w(int d, double kappa) { return (d - 1) * ccnr_scale(d) / (d * kappa - 1.0); }

ComplexMatrix depolarize(const ComplexMatrix& x) {
  const auto d = x.rows();
  return ComplexMatrix::Identity(d, d) * (x.trace() / static_cast<double>(d));
}

ComplexMatrix apply_phi_alpha(const MumFamily& family, int alpha, const StarRotation& rotation,
                              const ComplexMatrix& x) {
  const int d = family.dim();
  if (x.rows() != d || x.cols() != d) throw DimensionError("apply_phi_alpha: X must be d x d");
  if (rotation.dim() != d) throw DimensionError("apply_phi_alpha: rotation dimension mismatch");
  std::vector<Complex> weights(d);
  for (int l = 0; l < d; ++l) weights[l] = trace_product(family.op(alpha, l), x);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    Complex c = 0.0;
    for (int l = 0; l < d; ++l) c += rotation(k, l) * weights[l];
    out += c * family.op(alpha, k);
  }
  return out;
}

PositiveMap::PositiveMap(WitnessSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.N > 0) family_.emplace(build_mums(spec_.basis, spec_.kappa, spec_.N, spec_.enforce_positivity));
}

ComplexMatrix PositiveMap::component(int alpha, const ComplexMatrix& x) const {
  if (!family_ || alpha < 1 || alpha > spec_.N) throw PreconditionError("PositiveMap::component: alpha out of range");
  return apply_phi_alpha(*family_, alpha, spec_.rotations[alpha - 1], x);
}

ComplexMatrix PositiveMap::unnormalized(const ComplexMatrix& x) const {
  const int d = spec_.dim();
  if (x.rows() != d || x.cols() != d) throw DimensionError("PositiveMap: X must be d x d");
  ComplexMatrix out = spec_.depolarizing_weight() * depolarize(x);
  for (int alpha = 1; alpha <= spec_.N; ++alpha) {
    const double sign = alpha <= spec_.L ? -1.0 : 1.0;
    out += sign * component(alpha, x);
  }
  return out;
}

ComplexMatrix PositiveMap::operator()(const ComplexMatrix& x) const {
  return unnormalized(x) / (spec_.dim() * spec_.kappa - 1.0);
}

ComplexMatrix apply_phi(const WitnessSpec& spec, const ComplexMatrix& x) { return PositiveMap(spec)(x); }

ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& map, int d) {
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const ComplexMatrix image = map(matrix_unit(d, i, j));
      if (image.rows() != d || image.cols() != d) throw DimensionError("choi_matrix: map must preserve dimension");
      out.block(i * d, j * d, d, d) = image;
    }
  }
  return out;
}

ComplexMatrix h_operator(const MumFamily& family, int alpha, const StarRotation& rotation) {
  const int d = family.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int l = 0; l < d; ++l) {
    ComplexMatrix weighted = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) weighted += rotation(k, l) * family.op(alpha, k);
    out += kron(family.op(alpha, l).conjugate(), weighted);
  }
  return out;
}

ComplexMatrix j_operator(const FOperators& f, int alpha, const StarRotation& rotation) {
  const int d = f.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int l = 0; l < d; ++l) {
    ComplexMatrix weighted = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) weighted += rotation(k, l) * f.at(alpha, k);
    out += kron(f.at(alpha, l).conjugate(), weighted);
  }
  return out;
}

BipartiteOperator witness_W(const WitnessSpec& spec) {
  spec.validate();
  const int d = spec.dim();
  ComplexMatrix w = ComplexMatrix::Identity(d * d, d * d) * (spec.depolarizing_weight() / d);
  if (spec.N > 0) {
    const auto family = build_mums(spec.basis, spec.kappa, spec.N, spec.enforce_positivity);
    for (int alpha = 1; alpha <= spec.N; ++alpha) {
      const double sign = alpha <= spec.L ? -1.0 : 1.0;
      w += sign * h_operator(family, alpha, spec.rotations[alpha - 1]);
    }
  }
  return hermitian_result(std::move(w), d);
}

BipartiteOperator witness_Wtilde(const WitnessSpec& spec) {
  spec.validate();
  const int d = spec.dim();
  const auto full = build_mums(spec.basis, spec.kappa, d + 1, spec.enforce_positivity);
  const auto recovered = basis_from_mums(full, spec.basis.label());
  return witness_Wtilde(recovered, spec.L, spec.rotations);
}

BipartiteOperator witness_Wtilde(const HermitianBasis& basis, int L, std::span<const StarRotation> rotations) {
  const int d = basis.dim();
  const int n = static_cast<int>(rotations.size());
  if (n > d + 1 || L < 0 || L > n) throw PreconditionError("witness_Wtilde: need 0 <= L <= N <= d+1");
  const double s = sqrt_d(d) + 1.0;
  ComplexMatrix w = ComplexMatrix::Identity(d * d, d * d) * ((d - 1) * s * s);
  const auto f = build_F(basis);
  for (int alpha = 1; alpha <= n; ++alpha) {
    const auto& o = rotations[alpha - 1];
    require_positive_sign(o, "witness_Wtilde");
    if (o.dim() != d) throw DimensionError("witness_Wtilde: rotation dimension mismatch");
    const double sign = alpha <= L ? -1.0 : 1.0;
    w += sign * j_operator(f, alpha, o);
  }
  return hermitian_result(std::move(w), d);
}

BipartiteOperator reduction_witness(int d) {
  if (d < 2) throw PreconditionError("reduction_witness: d must be >= 2");
  ComplexMatrix w = ccnr_scale(d) * (identity(d * d) - d * max_entangled_projector(d));
  return hermitian_result(std::move(w), d);
}

ComplexMatrix shift_operator_r(int d, int r) {
  if (r < 0 || r >= d) throw PreconditionError("shift_operator_r: r must be in 0..d-1");
  ComplexMatrix m = d * max_entangled_projector(d);
  for (int k = 0; k < d; ++k) {
    const int shifted = ((k - r) % d + d) % d;
    ComplexMatrix diff = matrix_unit(d, k, k) - matrix_unit(d, shifted, shifted);
    m -= kron(diff, matrix_unit(d, k, k));
  }
  return m / static_cast<double>(d);
}

BipartiteOperator shift_witness(int d, int r) {
  if (d < 2) throw PreconditionError("shift_witness: d must be >= 2");
  ComplexMatrix w = ccnr_scale(d) * (identity(d * d) - d * shift_operator_r(d, r));
  return hermitian_result(std::move(w), d);
}

RealMatrix q_block(const StarRotation& rotation) {
  require_positive_sign(rotation, "q_block");
  const int d = rotation.dim();
  const double s = sqrt_d(d) + 1.0;
  RealMatrix q(d - 1, d - 1);
  for (int k = 1; k < d; ++k) {
    for (int l = 1; l < d; ++l) {
      q(k - 1, l - 1) = d * (rotation(0, 0) - 1.0) + d * s * s * rotation(k, l) -
                        d * s * (rotation(0, l) + rotation(k, 0));
    }
  }
  return q;
}

ComplexMatrix j_operator_from_q(const HermitianBasis& basis, int alpha, const RealMatrix& q) {
  const int d = basis.dim();
  if (q.rows() != d - 1 || q.cols() != d - 1) throw DimensionError("j_operator_from_q: Q block must be (d-1)x(d-1)");
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int l = 1; l < d; ++l) {
    ComplexMatrix weighted = ComplexMatrix::Zero(d, d);
    for (int k = 1; k < d; ++k) weighted += q(k - 1, l - 1) * basis.element(alpha, k);
    out += kron(basis.element(alpha, l).conjugate(), weighted);
  }
  return out;
}

RealMatrix assemble_block_q(std::span<const StarRotation> rotations) {
  if (rotations.empty()) throw PreconditionError("assemble_block_q: need d+1 rotations");
  const int d = rotations.front().dim();
  if (static_cast<int>(rotations.size()) != d + 1) {
    throw PreconditionError("assemble_block_q: need exactly d+1 = " + std::to_string(d + 1) + " rotations");
  }
  const double scale = ccnr_scale(d);
  RealMatrix q = RealMatrix::Zero(d * d, d * d);
  q(0, 0) = 1.0;
  for (int alpha = 1; alpha <= d + 1; ++alpha) {
    const int offset = HermitianBasis::flat_index(d, alpha, 1);
    // G_mu^T (x) G_nu pairs the column index of Q^(alpha) with mu, hence the transpose.
    q.block(offset, offset, d - 1, d - 1) = q_block(rotations[alpha - 1]).transpose() / scale;
  }
  return q;
}

BipartiteOperator ccnr_witness(const HermitianBasis& basis, const RealMatrix& q, double tol) {
  const int d = basis.dim();
  const int n = d * d;
  if (q.rows() != n || q.cols() != n) throw DimensionError("ccnr_witness: Q must be d^2 x d^2");
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(q.transpose() * q, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  if (top > 1.0 + tol) {
    throw PreconditionError("ccnr_witness: Q^T Q <= I violated (largest eigenvalue " + std::to_string(top) + ")");
  }
  const auto g = basis.flat();
  ComplexMatrix w = identity(n);
  for (int mu = 0; mu < n; ++mu) {
    ComplexMatrix weighted = ComplexMatrix::Zero(d, d);
    for (int nu = 0; nu < n; ++nu) {
      if (q(mu, nu) != 0.0) weighted += q(mu, nu) * g[nu];
    }
    w -= kron(g[mu].transpose(), weighted);
  }
  return hermitian_result(std::move(w), d);
}

}  // namespace mumw
