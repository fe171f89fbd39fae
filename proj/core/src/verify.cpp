#include "mumw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mumw/random.hpp"

namespace mumw {

namespace {

nlohmann::json spec_config(const WitnessSpec& spec) {
  nlohmann::json rot = nlohmann::json::array();
  for (const auto& o : spec.rotations) rot.push_back(o.descriptor());
  return {{"dim", spec.dim()},
          {"basis", std::string(to_string(spec.basis.label()))},
          {"N", spec.N},
          {"L", spec.L},
          {"kappa", spec.kappa},
          {"enforce_positivity", spec.enforce_positivity},
          {"rotations", rot}};
}

double trace_square(const ComplexMatrix& m) { return trace_product(m, m).real(); }

}  // namespace

CheckReport check_positivity_condition(const WitnessSpec& spec, long long samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("check_positivity_condition: samples must be >= 1");
  const PositiveMap map(spec);
  const int d = spec.dim();
  auto rng = make_rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  double worst_unnormalized = worst;
  const double scale = d * spec.kappa - 1.0;
  for (long long s = 0; s < samples; ++s) {
    const ComplexMatrix p = haar_random_projector(d, rng);
    const ComplexMatrix image = map.unnormalized(p);
    const double raw = trace_square(image);
    worst_unnormalized = std::max(worst_unnormalized, raw);
    worst = std::max(worst, raw / (scale * scale));
  }
  CheckReport report;
  report.check = "positivity-condition";
  report.config = spec_config(spec);
  report.config["seed"] = seed;
  report.config["unnormalized_worst"] = worst_unnormalized;
  report.config["unnormalized_bound"] = scale * scale / (d - 1.0);
  report.samples = samples;
  report.worst_value = worst;
  report.threshold = 1.0 / (d - 1.0) + 1e-9;
  report.pass = worst <= report.threshold;
  return report;
}

double ProofIdentityReport::max_identity_deviation() const {
  return std::max({depolarizing_square, depolarizing_cross, component_cross, component_square});
}

ProofIdentityReport check_proof_identities(const WitnessSpec& spec, long long samples, std::uint64_t seed) {
  const PositiveMap map(spec);
  const int d = spec.dim();
  const double k = spec.kappa;
  auto rng = make_rng(seed);
  ProofIdentityReport r;
  r.samples = samples;
  r.overlap_excess = -std::numeric_limits<double>::infinity();
  for (long long s = 0; s < samples; ++s) {
    const ComplexMatrix p = haar_random_projector(d, rng);
    const ComplexMatrix p0 = depolarize(p);
    r.depolarizing_square = std::max(r.depolarizing_square, std::abs(trace_square(p0) - 1.0 / d));
    std::vector<ComplexMatrix> images;
    for (int a = 1; a <= spec.N; ++a) images.push_back(map.component(a, p));
    for (int a = 0; a < spec.N; ++a) {
      r.depolarizing_cross =
          std::max(r.depolarizing_cross, std::abs(trace_product(p0, images[a]).real() - 1.0 / d));
      for (int b = a + 1; b < spec.N; ++b) {
        r.component_cross =
            std::max(r.component_cross, std::abs(trace_product(images[a], images[b]).real() - 1.0 / d));
      }
      double overlap = 0.0;
      for (int m = 0; m < d; ++m) {
        const double t = trace_product(map.family()->op(a + 1, m), p).real();
        overlap += t * t;
      }
      const double expected = (1.0 - k) / (d - 1.0) + (d * k - 1.0) / (d - 1.0) * overlap;
      r.component_square = std::max(r.component_square, std::abs(trace_square(images[a]) - expected));
    }
    if (map.family()) {
      r.overlap_excess =
          std::max(r.overlap_excess, overlap_square_sum(*map.family(), p) - ((spec.N - 1.0) / d + k));
    }
  }
  return r;
}

double product_expectation(const ComplexMatrix& w, const ComplexVector& psi, const ComplexVector& phi) {
  ComplexVector v(psi.size() * phi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) v.segment(i * phi.size(), phi.size()) = psi(i) * phi;
  return (v.adjoint() * w * v)(0, 0).real();
}

namespace {

// (I (x) <phi|) W (I (x) |phi>)
ComplexMatrix contract_second(const ComplexMatrix& w, const ComplexVector& phi, int d) {
  ComplexMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out(i, j) = (phi.adjoint() * w.block(i * d, j * d, d, d) * phi)(0, 0);
    }
  }
  return out;
}

// (<psi| (x) I) W (|psi> (x) I)
ComplexMatrix contract_first(const ComplexMatrix& w, const ComplexVector& psi, int d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out += std::conj(psi(i)) * psi(j) * w.block(i * d, j * d, d, d);
    }
  }
  return out;
}

ComplexVector lowest_vector(const ComplexMatrix& m, double& value) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
  value = solver.eigenvalues()(0);
  return solver.eigenvectors().col(0);
}

}  // namespace

ProductMinimum block_positivity_min(const ComplexMatrix& w, int d, const SeesawOptions& options) {
  if (w.rows() != d * d || w.cols() != d * d) throw DimensionError("block_positivity_min: W must be d^2 x d^2");
  const double herm = hermiticity_residual(w);
  if (herm > 1e-10 * std::max(1.0, max_abs(w))) {
    throw PreconditionError("block_positivity_min: W is not Hermitian");
  }
  ProductMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    auto rng = make_rng(options.seed, static_cast<std::uint64_t>(restart));
    ComplexVector phi = haar_random_vector(d, rng);
    ComplexVector psi;
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < options.max_iterations; ++it) {
      double v1 = 0.0;
      psi = lowest_vector(contract_second(w, phi, d), v1);
      double v2 = 0.0;
      phi = lowest_vector(contract_first(w, psi, d), v2);
      const bool converged = std::abs(value - v2) < options.convergence;
      value = v2;
      if (converged) break;
    }
    if (value < best.value) {
      best.value = value;
      best.psi = psi;
      best.phi = phi;
    }
  }
  // Re-evaluate at the returned vectors so the value is exactly attained.
  best.value = product_expectation(w, best.psi, best.phi);
  return best;
}

ProductMinimum block_positivity_min(const BipartiteOperator& w, const SeesawOptions& options) {
  return block_positivity_min(w.matrix(), w.dim(), options);
}

bool is_ppt(const BipartiteOperator& rho, double tol) {
  return min_eigenvalue(partial_transpose(rho.matrix(), rho.dim()), std::max(tol, kDefaultTol)) >= -tol;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::DetectedPptEntangled: return "detected-PPT-entangled";
    case Verdict::DetectedNpt: return "detected-NPT";
    case Verdict::NotDetected: return "not-detected";
    case Verdict::InvalidState: return "invalid-state";
  }
  return "invalid-state";
}

DetectionResult detect(const BipartiteOperator& w, const BipartiteOperator& rho, double tol) {
  if (w.dim() != rho.dim()) throw DimensionError("detect: witness and state dimensions differ");
  DetectionResult r;
  r.expectation = trace_product(w.matrix(), rho.matrix()).real();
  r.trace = rho.matrix().trace().real();
  const bool hermitian = hermiticity_residual(rho.matrix()) <= tol;
  r.psd = hermitian && is_psd(rho.matrix(), tol);
  r.ppt = hermitian && is_ppt(rho, tol);
  const bool valid = r.psd && std::abs(r.trace - 1.0) <= tol;
  if (!valid) {
    r.verdict = Verdict::InvalidState;
  } else if (r.expectation < -tol) {
    r.verdict = r.ppt ? Verdict::DetectedPptEntangled : Verdict::DetectedNpt;
  } else {
    r.verdict = Verdict::NotDetected;
  }
  return r;
}

DecompositionCertificate verify_decomposition(const BipartiteOperator& w, const ComplexMatrix& a,
                                              const ComplexMatrix& b, double tol) {
  const int d = w.dim();
  if (a.rows() != d * d || a.cols() != d * d || b.rows() != d * d || b.cols() != d * d) {
    throw DimensionError("verify_decomposition: A and B must match the witness dimensions");
  }
  DecompositionCertificate c;
  c.a = a;
  c.b = b;
  c.tolerance = tol;
  c.residual = max_abs(w.matrix() - a - partial_transpose(b, d));
  c.min_eig_a = min_eigenvalue(a, std::max(tol, kDefaultTol));
  c.min_eig_b = min_eigenvalue(b, std::max(tol, kDefaultTol));
  return c;
}

std::optional<DecompositionCertificate> search_decomposition(const BipartiteOperator& w, int max_iterations,
                                                             double tol) {
  const int d = w.dim();
  const ComplexMatrix& target = w.matrix();
  if (hermiticity_residual(target) > 1e-10 * std::max(1.0, max_abs(target))) {
    throw PreconditionError("search_decomposition: W is not Hermitian");
  }
  ComplexMatrix b = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix a;
  for (int it = 0; it < max_iterations; ++it) {
    a = project_psd(target - partial_transpose(b, d));
    b = project_psd(partial_transpose(target - a, d));
    if (max_abs(target - a - partial_transpose(b, d)) <= tol) {
      auto cert = verify_decomposition(w, a, b, tol);
      if (cert.valid()) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace mumw
