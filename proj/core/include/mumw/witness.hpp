#pragma once

// Positive trace-preserving maps built from mutually unbiased measurements,
// their Choi-type entanglement witnesses, and the CCNR-class representation.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mumw/basis.hpp"
#include "mumw/linalg.hpp"
#include "mumw/mum.hpp"
#include "mumw/rotations.hpp"

namespace mumw {

/// Recipe for a map / witness. The first L measurement groups enter with a
/// minus sign, groups L+1..N with a plus sign; rotations[alpha-1] acts on group alpha.
struct WitnessSpec {
  HermitianBasis basis;
  int N = 0;
  int L = 0;
  double kappa = 1.0;
  std::vector<StarRotation> rotations;
  bool enforce_positivity = true;

  int dim() const noexcept { return basis.dim(); }
  /// Weight of the depolarizing channel: d*kappa - 1 - N + 2L.
  double depolarizing_weight() const noexcept;
  /// Throws PreconditionError if the recipe is inconsistent.
  void validate() const;
};

/// Spec with identity rotations on every group.
WitnessSpec make_spec(HermitianBasis basis, int N, int L, double kappa, bool enforce_positivity = true);

/// d(sqrt d + 1)^2: the CCNR normalisation and the Q^(alpha) scale.
double ccnr_scale(int d);
/// d(d-1)(sqrt d + 1)^2 / (d kappa - 1): ratio W~ / W.
double wtilde_over_w(int d, double kappa);

/// Phi_alpha[X] = sum_kl O_kl P_k Tr(P_l X).
ComplexMatrix apply_phi_alpha(const MumFamily& family, int alpha, const StarRotation& rotation,
                              const ComplexMatrix& x);

/// Completely depolarizing channel I Tr(X) / d.
ComplexMatrix depolarize(const ComplexMatrix& x);

class PositiveMap {
 public:
  explicit PositiveMap(WitnessSpec spec);

  const WitnessSpec& spec() const noexcept { return spec_; }
  /// Empty when N = 0.
  const std::optional<MumFamily>& family() const noexcept { return family_; }

  /// Phi[X].
  ComplexMatrix operator()(const ComplexMatrix& x) const;
  /// (d kappa - 1) Phi[X].
  ComplexMatrix unnormalized(const ComplexMatrix& x) const;
  /// Phi_alpha[X] for alpha in 1..N.
  ComplexMatrix component(int alpha, const ComplexMatrix& x) const;

 private:
  WitnessSpec spec_;
  std::optional<MumFamily> family_;
};

ComplexMatrix apply_phi(const WitnessSpec& spec, const ComplexMatrix& x);

/// sum_ij |i><j| (x) map(|i><j|).
ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& map, int d);

/// H_alpha = sum_kl O_kl conj(P_l) (x) P_k.
ComplexMatrix h_operator(const MumFamily& family, int alpha, const StarRotation& rotation);
/// J_alpha = sum_kl O_kl conj(F_l) (x) F_k.
ComplexMatrix j_operator(const FOperators& f, int alpha, const StarRotation& rotation);

/// W = (a/d) I + sum_{alpha > L} H_alpha - sum_{alpha <= L} H_alpha.
BipartiteOperator witness_W(const WitnessSpec& spec);

/// W~ built by reverse-engineering the basis from the full family of d+1
/// measurements at the spec's kappa, then
/// W~ = (d-1)(sqrt d+1)^2 I + sum_{alpha > L} J_alpha - sum_{alpha <= L} J_alpha.
BipartiteOperator witness_Wtilde(const WitnessSpec& spec);

/// Same expression evaluated directly from a basis (no measurement round trip).
BipartiteOperator witness_Wtilde(const HermitianBasis& basis, int L, std::span<const StarRotation> rotations);

/// d(sqrt d+1)^2 (I - d P_+).
BipartiteOperator reduction_witness(int d);

/// R = (1/d)[sum_km |k><m| (x) |k><m| - sum_k (|k><k| - |k-r><k-r|) (x) |k><k|].
ComplexMatrix shift_operator_r(int d, int r);
/// d(sqrt d+1)^2 (I - d R), the witness of a cyclic shift on the diagonal group.
BipartiteOperator shift_witness(int d, int r);

/// Q^(alpha)_kl = d(O_00 - 1) + d(sqrt d+1)^2 O_kl - d(sqrt d+1)(O_0l + O_k0), k,l = 1..d-1.
RealMatrix q_block(const StarRotation& rotation);

/// J_alpha = sum_kl Q_kl conj(G_{alpha,l}) (x) G_{alpha,k}.
ComplexMatrix j_operator_from_q(const HermitianBasis& basis, int alpha, const RealMatrix& q);

/// d^2 x d^2 block-diagonal matrix [1; Q^(1)T; ...; Q^(d+1)T] / scaling, in the
/// flat index of HermitianBasis::flat, such that ccnr_witness reproduces
/// W~ / (d(sqrt d+1)^2) for N = L = d+1.
RealMatrix assemble_block_q(std::span<const StarRotation> rotations);

/// W' = I - sum_{mu,nu} Q_{mu nu} G_mu^T (x) G_nu. Requires Q^T Q <= I (to tol).
BipartiteOperator ccnr_witness(const HermitianBasis& basis, const RealMatrix& q, double tol = kDefaultTol);

}  // namespace mumw
