#include "mumw/mum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mumw {

FOperators::FOperators(int dim, std::vector<std::vector<ComplexMatrix>> ops)
    : dim_(dim), ops_(std::move(ops)) {}

const ComplexMatrix& FOperators::at(int alpha, int k) const {
  if (alpha < 1 || alpha > count() || k < 0 || k >= dim_) {
    throw PreconditionError("FOperators::at: index out of range");
  }
  return ops_[alpha - 1][k];
}

FOperators build_F(const HermitianBasis& basis) {
  const int d = basis.dim();
  const double sd = std::sqrt(static_cast<double>(d));
  std::vector<std::vector<ComplexMatrix>> ops;
  ops.reserve(basis.group_count());
  for (int alpha = 1; alpha <= basis.group_count(); ++alpha) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& g : basis.group(alpha)) sum += g;
    std::vector<ComplexMatrix> f;
    f.reserve(d);
    f.push_back((sd + 1.0) * sum);
    for (int k = 1; k < d; ++k) f.push_back(sum - sd * (sd + 1.0) * basis.element(alpha, k));
    ops.push_back(std::move(f));
  }
  return FOperators(d, std::move(ops));
}

double kappa_to_t(int d, double kappa, bool positivity_semantics) {
  if (d < 2) throw PreconditionError("kappa_to_t: dimension must be >= 2");
  const double lower = 1.0 / d;
  if (!(kappa > lower)) {
    throw PreconditionError("kappa_to_t: kappa = " + std::to_string(kappa) + " must exceed 1/d = " +
                            std::to_string(lower));
  }
  if (positivity_semantics && kappa > 1.0 + 1e-12) {
    throw PreconditionError("kappa_to_t: kappa = " + std::to_string(kappa) +
                            " exceeds 1 under positivity semantics");
  }
  const double sd = std::sqrt(static_cast<double>(d));
  return std::sqrt((kappa - lower) / ((d - 1) * (1.0 + sd) * (1.0 + sd)));
}

double t_to_kappa(int d, double t) {
  if (d < 2) throw PreconditionError("t_to_kappa: dimension must be >= 2");
  const double sd = std::sqrt(static_cast<double>(d));
  return 1.0 / d + (d - 1) * t * t * (1.0 + sd) * (1.0 + sd);
}

MumFamily::MumFamily(int dim, std::vector<std::vector<ComplexMatrix>> ops, double kappa, double t,
                     bool positivity_enforced)
    : dim_(dim), ops_(std::move(ops)), kappa_(kappa), t_(t), positivity_enforced_(positivity_enforced) {
  if (dim_ < 2) throw PreconditionError("MumFamily: dimension must be >= 2");
  if (ops_.empty() || static_cast<int>(ops_.size()) > dim_ + 1) {
    throw PreconditionError("MumFamily: number of measurements must be in 1..d+1");
  }
  for (const auto& m : ops_) {
    if (static_cast<int>(m.size()) != dim_) throw DimensionError("MumFamily: each measurement needs d outcomes");
    for (const auto& p : m) {
      if (p.rows() != dim_ || p.cols() != dim_) throw DimensionError("MumFamily: operators must be d x d");
    }
  }
}

const ComplexMatrix& MumFamily::op(int alpha, int k) const {
  if (alpha < 1 || alpha > count() || k < 0 || k >= dim_) {
    throw PreconditionError("MumFamily::op: index (" + std::to_string(alpha) + "," + std::to_string(k) +
                            ") out of range");
  }
  return ops_[alpha - 1][k];
}

double kappa_opt(const HermitianBasis& basis) {
  const int d = basis.dim();
  const auto f = build_F(basis);
  double t_max = std::numeric_limits<double>::infinity();
  for (int alpha = 1; alpha <= f.count(); ++alpha) {
    for (int k = 0; k < d; ++k) {
      const double lambda = min_eigenvalue(f.at(alpha, k), 1e-8);
      if (lambda < 0.0) t_max = std::min(t_max, 1.0 / (d * -lambda));
    }
  }
  if (!std::isfinite(t_max)) return 1.0;
  return std::min(1.0, t_to_kappa(d, t_max));
}

MumFamily build_mums(const HermitianBasis& basis, double kappa, int N, bool enforce_positivity) {
  const int d = basis.dim();
  if (N < 1 || N > d + 1) {
    throw PreconditionError("build_mums: N = " + std::to_string(N) + " must be in 1..d+1");
  }
  if (enforce_positivity) {
    const double opt = kappa_opt(basis);
    if (kappa > opt + 1e-12) {
      throw PreconditionError("build_mums: kappa = " + std::to_string(kappa) + " exceeds kappa_opt = " +
                              std::to_string(opt) + " while positivity is enforced");
    }
  }
  const double t = kappa_to_t(d, kappa, enforce_positivity);
  const auto f = build_F(basis);
  const ComplexMatrix id_over_d = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  std::vector<std::vector<ComplexMatrix>> ops;
  ops.reserve(N);
  for (int alpha = 1; alpha <= N; ++alpha) {
    std::vector<ComplexMatrix> m;
    m.reserve(d);
    for (int k = 0; k < d; ++k) m.push_back(id_over_d + t * f.at(alpha, k));
    ops.push_back(std::move(m));
  }
  return MumFamily(d, std::move(ops), kappa, t, enforce_positivity);
}

double MumReport::max_deviation() const {
  return std::max({max_trace_deviation, max_completeness_deviation, max_gram_deviation});
}

bool MumReport::pass(double tol) const {
  return max_deviation() <= tol && (!positivity_checked || min_eigenvalue >= -kDefaultTol);
}

double mum_gram_value(int d, double kappa, bool same_measurement, bool same_outcome) {
  const double delta = same_measurement ? ((same_outcome ? 1.0 : 0.0) - 1.0 / d) : 0.0;
  return 1.0 / d + (d * kappa - 1.0) / (d - 1.0) * delta;
}

MumReport verify_mum(const MumFamily& family, bool check_positivity) {
  MumReport r;
  const int d = family.dim();
  const int n = family.count();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  r.positivity_checked = check_positivity;
  for (int a = 1; a <= n; ++a) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      const auto& p = family.op(a, k);
      sum += p;
      r.max_trace_deviation = std::max(r.max_trace_deviation, std::abs(p.trace() - 1.0));
      if (check_positivity) r.min_eigenvalue = std::min(r.min_eigenvalue, min_eigenvalue(p, 1e-8));
      for (int b = a; b <= n; ++b) {
        for (int l = 0; l < d; ++l) {
          const Complex value = trace_product(p, family.op(b, l));
          const double expected = mum_gram_value(d, family.kappa(), a == b, k == l);
          r.max_gram_deviation = std::max(r.max_gram_deviation, std::abs(value - expected));
        }
      }
    }
    r.max_completeness_deviation = std::max(r.max_completeness_deviation, max_abs(sum - id));
  }
  if (!check_positivity) r.min_eigenvalue = 0.0;
  return r;
}

double overlap_square_sum(const MumFamily& family, const ComplexMatrix& state) {
  double total = 0.0;
  for (int a = 1; a <= family.count(); ++a) {
    for (int k = 0; k < family.dim(); ++k) {
      const double p = trace_product(family.op(a, k), state).real();
      total += p * p;
    }
  }
  return total;
}

}  // namespace mumw
