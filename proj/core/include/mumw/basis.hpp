#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mumw/linalg.hpp"

namespace mumw {

class MumFamily;

enum class BasisLabel { GellMann, AppendixB, MubDerived, Custom };

std::string_view to_string(BasisLabel label);
BasisLabel basis_label_from_string(std::string_view text);

/// Orthonormal Hermitian operator basis {I/sqrt(d), G_{alpha,k}} grouped by
/// measurement index alpha = 1..d+1, with k = 1..d-1 inside each group.
///
/// The constructor checks shapes only. Use `checked()` (or the generators
/// below, which produce valid bases by construction) when the orthonormality
/// invariants must hold.
class HermitianBasis {
 public:
  using Group = std::vector<ComplexMatrix>;

  HermitianBasis(int dim, BasisLabel label, std::vector<Group> groups);

  /// Constructs and validates Hermiticity, tracelessness and orthonormality to `tol`.
  static HermitianBasis checked(int dim, BasisLabel label, std::vector<Group> groups,
                                double tol = kDefaultTol);

  int dim() const noexcept { return dim_; }
  BasisLabel label() const noexcept { return label_; }
  const ComplexMatrix& g0() const noexcept { return g0_; }
  int group_count() const noexcept { return static_cast<int>(groups_.size()); }

  /// G_{alpha,k}, alpha in 1..d+1, k in 1..d-1.
  const ComplexMatrix& element(int alpha, int k) const;
  std::span<const ComplexMatrix> group(int alpha) const;

  /// Flat ordering: mu = 0 is g0, mu = (alpha-1)(d-1) + k for the rest.
  std::vector<ComplexMatrix> flat() const;
  static int flat_index(int dim, int alpha, int k) { return (alpha - 1) * (dim - 1) + k; }

  /// Basis whose group alpha is this basis' group order[alpha-1] (1-based permutation).
  HermitianBasis reordered(std::span<const int> order) const;

 private:
  int dim_;
  BasisLabel label_;
  ComplexMatrix g0_;
  std::vector<Group> groups_;
};

/// Generalized Gell-Mann matrices. Group alpha <= d holds sigma_{j,alpha-1}
/// for j != alpha-1 in increasing j; group d+1 holds the diagonal sigma_kk.
HermitianBasis gellmann_basis(int d);

/// Gell-Mann off-diagonal operators with modified diagonal operators
/// sigma'_kk = (I + sqrt(d)|0><0|) / (sqrt(d)(sqrt(d)+1)) - |k><k|.
HermitianBasis appendix_b_basis(int d);

/// Basis reverse-engineered from the d+1 mutually unbiased bases of a prime d
/// (as sharp measurements, kappa = 1).
HermitianBasis mub_derived_basis(int d);

/// d+1 mutually unbiased orthonormal bases for prime d: the computational
/// basis followed by the quadratic-phase bases a = 0..d-1. Element [b][k] is
/// the k-th vector of basis b.
std::vector<std::vector<ComplexVector>> mutually_unbiased_bases(int d);

bool is_prime(int n);

/// Inverts P = I/d + t F to recover G_{alpha,k} from a complete family.
/// Requires N = d+1, t != 0, and the MUM trace relations to hold to 1e-8.
HermitianBasis basis_from_mums(const MumFamily& family, BasisLabel label = BasisLabel::Custom);

struct OrthonormalityReport {
  double max_gram_deviation = 0.0;  // over the full d^2 x d^2 Gram matrix incl. g0
  int worst_row = 0;                // flat indices of the worst Gram entry
  int worst_col = 0;
  double max_abs_trace = 0.0;             // over the traceless elements
  double max_hermiticity_residual = 0.0;
  double tolerance = kDefaultTol;

  bool pass() const {
    return max_gram_deviation <= tolerance && max_abs_trace <= tolerance &&
           max_hermiticity_residual <= tolerance;
  }
};

OrthonormalityReport verify_orthonormal(const HermitianBasis& basis, double tol = kDefaultTol);

}  // namespace mumw
