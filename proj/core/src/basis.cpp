#include "mumw/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mumw/mum.hpp"

namespace mumw {

namespace {

void require_dim(int d, const char* what) {
  if (d < 2) throw PreconditionError(std::string(what) + ": dimension must be >= 2, got " + std::to_string(d));
}

// sigma_{kl} for k != l (symmetric for k < l, antisymmetric for k > l)
// and sigma_{kk} for k >= 1.
ComplexMatrix gellmann_element(int d, int k, int l) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  if (k < l) {
    m(k, l) = inv_sqrt2;
    m(l, k) = inv_sqrt2;
  } else if (k > l) {
    // sigma_{kl}, k > l, is i/sqrt2 (|l><k| - |k><l|)
    m(l, k) = Complex(0.0, inv_sqrt2);
    m(k, l) = Complex(0.0, -inv_sqrt2);
  } else {
    const double norm = std::sqrt(1.0 / (k * (k + 1.0)));
    for (int j = 0; j < k; ++j) m(j, j) = norm;
    m(k, k) = -k * norm;
  }
  return m;
}

std::vector<HermitianBasis::Group> off_diagonal_groups(int d) {
  std::vector<HermitianBasis::Group> groups;
  groups.reserve(d + 1);
  for (int alpha = 1; alpha <= d; ++alpha) {
    HermitianBasis::Group g;
    for (int j = 0; j < d; ++j) {
      if (j != alpha - 1) g.push_back(gellmann_element(d, j, alpha - 1));
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace

std::string_view to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::GellMann: return "gellmann";
    case BasisLabel::AppendixB: return "appendix-b";
    case BasisLabel::MubDerived: return "mub";
    case BasisLabel::Custom: return "custom";
  }
  return "custom";
}

BasisLabel basis_label_from_string(std::string_view text) {
  if (text == "gellmann") return BasisLabel::GellMann;
  if (text == "appendix-b") return BasisLabel::AppendixB;
  if (text == "mub" || text == "mub-derived") return BasisLabel::MubDerived;
  if (text == "custom") return BasisLabel::Custom;
  throw PreconditionError("unknown basis label '" + std::string(text) +
                          "' (expected gellmann, appendix-b, mub or custom)");
}

HermitianBasis::HermitianBasis(int dim, BasisLabel label, std::vector<Group> groups)
    : dim_(dim), label_(label), groups_(std::move(groups)) {
  require_dim(dim_, "HermitianBasis");
  if (static_cast<int>(groups_.size()) != dim_ + 1) {
    throw DimensionError("HermitianBasis: expected d+1 = " + std::to_string(dim_ + 1) + " groups, got " +
                         std::to_string(groups_.size()));
  }
  for (const auto& g : groups_) {
    if (static_cast<int>(g.size()) != dim_ - 1) {
      throw DimensionError("HermitianBasis: every group must hold d-1 = " + std::to_string(dim_ - 1) +
                           " operators");
    }
    for (const auto& m : g) {
      if (m.rows() != dim_ || m.cols() != dim_) {
        throw DimensionError("HermitianBasis: operators must be d x d");
      }
    }
  }
  g0_ = ComplexMatrix::Identity(dim_, dim_) / std::sqrt(static_cast<double>(dim_));
}

HermitianBasis HermitianBasis::checked(int dim, BasisLabel label, std::vector<Group> groups, double tol) {
  HermitianBasis basis(dim, label, std::move(groups));
  const auto report = verify_orthonormal(basis, tol);
  if (!report.pass()) {
    throw PreconditionError("HermitianBasis: not an orthonormal Hermitian traceless basis (gram deviation " +
                            std::to_string(report.max_gram_deviation) + ", max |trace| " +
                            std::to_string(report.max_abs_trace) + ", hermiticity residual " +
                            std::to_string(report.max_hermiticity_residual) + ")");
  }
  return basis;
}

const ComplexMatrix& HermitianBasis::element(int alpha, int k) const {
  if (alpha < 1 || alpha > group_count() || k < 1 || k > dim_ - 1) {
    throw PreconditionError("HermitianBasis::element: index (" + std::to_string(alpha) + "," +
                            std::to_string(k) + ") out of range");
  }
  return groups_[alpha - 1][k - 1];
}

std::span<const ComplexMatrix> HermitianBasis::group(int alpha) const {
  if (alpha < 1 || alpha > group_count()) {
    throw PreconditionError("HermitianBasis::group: alpha out of range");
  }
  return groups_[alpha - 1];
}

std::vector<ComplexMatrix> HermitianBasis::flat() const {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(dim_) * dim_);
  out.push_back(g0_);
  for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
  return out;
}

HermitianBasis HermitianBasis::reordered(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != group_count()) {
    throw PreconditionError("reordered: permutation must list all d+1 groups");
  }
  std::vector<int> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < group_count(); ++i) {
    if (seen[i] != i + 1) throw PreconditionError("reordered: not a permutation of 1..d+1");
  }
  std::vector<Group> groups;
  groups.reserve(groups_.size());
  for (int src : order) groups.push_back(groups_[src - 1]);
  return HermitianBasis(dim_, label_, std::move(groups));
}

HermitianBasis gellmann_basis(int d) {
  require_dim(d, "gellmann_basis");
  auto groups = off_diagonal_groups(d);
  HermitianBasis::Group diag;
  for (int k = 1; k < d; ++k) diag.push_back(gellmann_element(d, k, k));
  groups.push_back(std::move(diag));
  return HermitianBasis(d, BasisLabel::GellMann, std::move(groups));
}

HermitianBasis appendix_b_basis(int d) {
  require_dim(d, "appendix_b_basis");
  auto groups = off_diagonal_groups(d);
  const double sd = std::sqrt(static_cast<double>(d));
  ComplexMatrix shift = ComplexMatrix::Identity(d, d);
  shift(0, 0) += sd;
  shift /= sd * (sd + 1.0);
  HermitianBasis::Group diag;
  for (int k = 1; k < d; ++k) {
    ComplexMatrix m = shift;
    m(k, k) -= 1.0;
    diag.push_back(std::move(m));
  }
  groups.push_back(std::move(diag));
  return HermitianBasis(d, BasisLabel::AppendixB, std::move(groups));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::vector<ComplexVector>> mutually_unbiased_bases(int d) {
  if (!is_prime(d)) {
    throw PreconditionError("mutually_unbiased_bases: d = " + std::to_string(d) + " is not prime");
  }
  std::vector<std::vector<ComplexVector>> bases;
  bases.reserve(d + 1);
  std::vector<ComplexVector> computational;
  for (int k = 0; k < d; ++k) computational.push_back(ComplexVector::Unit(d, k));
  bases.push_back(std::move(computational));

  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    std::vector<ComplexVector> basis;
    for (int k = 0; k < d; ++k) {
      ComplexVector v(d);
      for (int j = 0; j < d; ++j) {
        // d = 2 needs fourth roots of unity: i^{aj} (-1)^{kj}; odd primes use w^{a j^2 + k j}.
        double phase = 0.0;
        if (d == 2) {
          phase = std::numbers::pi * (0.5 * a * j + k * j);
        } else {
          const long long e = (static_cast<long long>(a) * j * j + static_cast<long long>(k) * j) % d;
          phase = 2.0 * std::numbers::pi * static_cast<double>(e) / d;
        }
        v(j) = norm * std::polar(1.0, phase);
      }
      basis.push_back(std::move(v));
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

HermitianBasis mub_derived_basis(int d) {
  if (!is_prime(d)) {
    throw PreconditionError("mub_derived_basis: d = " + std::to_string(d) + " is not prime");
  }
  const auto bases = mutually_unbiased_bases(d);
  std::vector<std::vector<ComplexMatrix>> projectors;
  for (const auto& b : bases) {
    std::vector<ComplexMatrix> ps;
    for (const auto& v : b) ps.push_back(outer(v));
    projectors.push_back(std::move(ps));
  }
  const MumFamily family(d, std::move(projectors), 1.0, kappa_to_t(d, 1.0), true);
  return basis_from_mums(family, BasisLabel::MubDerived);
}

HermitianBasis basis_from_mums(const MumFamily& family, BasisLabel label) {
  const int d = family.dim();
  if (family.count() != d + 1) {
    throw PreconditionError("basis_from_mums: need the full family of d+1 = " + std::to_string(d + 1) +
                            " measurements, got " + std::to_string(family.count()));
  }
  if (family.t() == 0.0) throw PreconditionError("basis_from_mums: t = 0 cannot be inverted");
  const auto report = verify_mum(family, false);
  if (!(report.max_deviation() <= 1e-8)) {
    throw PreconditionError("basis_from_mums: family violates the MUM trace relations (max deviation " +
                            std::to_string(report.max_deviation()) + ")");
  }
  const double sd = std::sqrt(static_cast<double>(d));
  const ComplexMatrix id_over_d = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  std::vector<HermitianBasis::Group> groups;
  for (int alpha = 1; alpha <= d + 1; ++alpha) {
    std::vector<ComplexMatrix> f;
    for (int k = 0; k < d; ++k) f.push_back((family.op(alpha, k) - id_over_d) / family.t());
    HermitianBasis::Group g;
    for (int k = 1; k < d; ++k) {
      g.push_back((f[0] / (sd + 1.0) - f[k]) / (sd * (sd + 1.0)));
    }
    groups.push_back(std::move(g));
  }
  return HermitianBasis(d, label, std::move(groups));
}

OrthonormalityReport verify_orthonormal(const HermitianBasis& basis, double tol) {
  OrthonormalityReport report;
  report.tolerance = tol;
  const auto flat = basis.flat();
  const int n = static_cast<int>(flat.size());
  for (int mu = 0; mu < n; ++mu) {
    report.max_hermiticity_residual = std::max(report.max_hermiticity_residual, hermiticity_residual(flat[mu]));
    if (mu > 0) report.max_abs_trace = std::max(report.max_abs_trace, std::abs(flat[mu].trace()));
    for (int nu = mu; nu < n; ++nu) {
      const double dev = std::abs(trace_inner(flat[mu], flat[nu]) - Complex(mu == nu ? 1.0 : 0.0));
      if (dev > report.max_gram_deviation) {
        report.max_gram_deviation = dev;
        report.worst_row = mu;
        report.worst_col = nu;
      }
    }
  }
  return report;
}

}  // namespace mumw
