#pragma once

// Numerical certification: map positivity by sampling, block-positivity by
// see-saw, PPT tests, entanglement detection and decomposition certificates.

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mumw/linalg.hpp"
#include "mumw/witness.hpp"

namespace mumw {

/// One pass/fail line of a verification run.
struct CheckReport {
  std::string check;
  nlohmann::json config = nlohmann::json::object();
  long long samples = 0;
  double worst_value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Samples Haar-random rank-1 projectors P and reports max Tr(Phi[P]^2)
/// against 1/(d-1) + 1e-9. `config` also records the worst Tr(Phi~[P]^2)
/// against (d kappa - 1)^2/(d-1).
CheckReport check_positivity_condition(const WitnessSpec& spec, long long samples, std::uint64_t seed);

/// Worst deviations of the trace identities used in the positivity argument,
/// evaluated on random rank-1 projectors.
struct ProofIdentityReport {
  long long samples = 0;
  double depolarizing_square = 0.0;  // |Tr(Phi0[P]^2) - 1/d|
  double depolarizing_cross = 0.0;   // |Tr(Phi0[P] Phi_a[P]) - 1/d|
  double component_cross = 0.0;      // |Tr(Phi_a[P] Phi_b[P]) - 1/d|, a != b
  double component_square = 0.0;     // |Tr(Phi_a[P]^2) - (1-k)/(d-1) - (dk-1)/(d-1) sum_m Tr(P_m P)^2|
  double overlap_excess = 0.0;       // max of sum Tr(P_k P)^2 - ((N-1)/d + kappa), may be negative
  double max_identity_deviation() const;
};

ProofIdentityReport check_proof_identities(const WitnessSpec& spec, long long samples, std::uint64_t seed);

struct SeesawOptions {
  int restarts = 32;
  int max_iterations = 500;
  double convergence = 1e-12;
  std::uint64_t seed = 0;
};

struct ProductMinimum {
  double value = 0.0;
  ComplexVector psi;
  ComplexVector phi;
};

/// Upper bound on min <psi phi|W|psi phi> over product vectors found by
/// alternating smallest-eigenvector updates with multiple random starts.
/// Restart r uses generator stream r of `seed`.
ProductMinimum block_positivity_min(const ComplexMatrix& w, int d, const SeesawOptions& options = {});
ProductMinimum block_positivity_min(const BipartiteOperator& w, const SeesawOptions& options = {});

/// <psi (x) phi| W |psi (x) phi>.
double product_expectation(const ComplexMatrix& w, const ComplexVector& psi, const ComplexVector& phi);

inline constexpr double kStateTol = 1e-9;

bool is_ppt(const BipartiteOperator& rho, double tol = kStateTol);

enum class Verdict { DetectedPptEntangled, DetectedNpt, NotDetected, InvalidState };
std::string_view to_string(Verdict verdict);

struct DetectionResult {
  double expectation = 0.0;  // Re Tr(W rho)
  bool ppt = false;
  bool psd = false;
  double trace = 0.0;
  Verdict verdict = Verdict::InvalidState;
};

DetectionResult detect(const BipartiteOperator& w, const BipartiteOperator& rho, double tol = kStateTol);

struct DecompositionCertificate {
  ComplexMatrix a;
  ComplexMatrix b;
  double residual = 0.0;  // ||W - A - B^Gamma||_max
  double min_eig_a = 0.0;
  double min_eig_b = 0.0;
  double tolerance = kStateTol;

  bool valid() const { return residual <= tolerance && min_eig_a >= -tolerance && min_eig_b >= -tolerance; }
};

DecompositionCertificate verify_decomposition(const BipartiteOperator& w, const ComplexMatrix& a,
                                              const ComplexMatrix& b, double tol = kStateTol);

/// Alternating projection: A <- PSD(W - B^Gamma), B <- PSD((W - A)^Gamma).
/// Returns a certificate once the residual drops below `tol`. Returning
/// nothing does NOT prove the witness indecomposable.
std::optional<DecompositionCertificate> search_decomposition(const BipartiteOperator& w, int max_iterations = 20000,
                                                             double tol = kStateTol);

}  // namespace mumw
