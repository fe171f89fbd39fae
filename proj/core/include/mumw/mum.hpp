#pragma once

// Mutually unbiased measurements built from a Hermitian operator basis:
// P_k^(alpha) = I/d + t F_k^(alpha), with kappa and t tied by
// kappa = 1/d + (d-1) t^2 (1 + sqrt d)^2.

#include <vector>

#include "mumw/basis.hpp"
#include "mumw/linalg.hpp"

namespace mumw {

/// F_k^(alpha) for alpha = 1..d+1, k = 0..d-1.
class FOperators {
 public:
  FOperators(int dim, std::vector<std::vector<ComplexMatrix>> ops);

  int dim() const noexcept { return dim_; }
  int count() const noexcept { return static_cast<int>(ops_.size()); }
  const ComplexMatrix& at(int alpha, int k) const;

 private:
  int dim_;
  std::vector<std::vector<ComplexMatrix>> ops_;
};

FOperators build_F(const HermitianBasis& basis);

/// Positive root t of the kappa relation. Requires kappa > 1/d; with
/// positivity semantics also kappa <= 1.
double kappa_to_t(int d, double kappa, bool positivity_semantics = true);
double t_to_kappa(int d, double t);

/// N measurements (alpha = 1..N), each with d outcomes (k = 0..d-1).
class MumFamily {
 public:
  MumFamily(int dim, std::vector<std::vector<ComplexMatrix>> ops, double kappa, double t,
            bool positivity_enforced);

  int dim() const noexcept { return dim_; }
  int count() const noexcept { return static_cast<int>(ops_.size()); }
  double kappa() const noexcept { return kappa_; }
  double t() const noexcept { return t_; }
  bool positivity_enforced() const noexcept { return positivity_enforced_; }

  /// P_k^(alpha), alpha in 1..N, k in 0..d-1.
  const ComplexMatrix& op(int alpha, int k) const;

 private:
  int dim_;
  std::vector<std::vector<ComplexMatrix>> ops_;
  double kappa_;
  double t_;
  bool positivity_enforced_;
};

/// Builds the first N measurements of the family defined by `basis` at `kappa`.
/// With enforce_positivity, kappa must not exceed kappa_opt(basis); without it
/// any kappa > 1/d is accepted and operators may fail to be positive.
MumFamily build_mums(const HermitianBasis& basis, double kappa, int N, bool enforce_positivity = true);

/// Largest kappa keeping every P_k^(alpha) (all d+1 groups) positive, clamped to 1.
double kappa_opt(const HermitianBasis& basis);

struct MumReport {
  double max_trace_deviation = 0.0;        // |Tr P - 1|
  double max_completeness_deviation = 0.0; // ||sum_k P_k - I||_max
  double max_gram_deviation = 0.0;         // against the MUM Gram structure
  double min_eigenvalue = 0.0;             // over all P, when positivity was checked
  bool positivity_checked = false;

  double max_deviation() const;
  bool pass(double tol = 1e-8) const;
};

/// Expected Tr(P_k^(a) P_l^(b)) for a MUM with sharpness kappa.
double mum_gram_value(int d, double kappa, bool same_measurement, bool same_outcome);

MumReport verify_mum(const MumFamily& family, bool check_positivity);

/// sum_alpha sum_k [Tr(P_k^(alpha) P)]^2, the quantity bounded by (N-1)/d + kappa.
double overlap_square_sum(const MumFamily& family, const ComplexMatrix& state);

}  // namespace mumw
