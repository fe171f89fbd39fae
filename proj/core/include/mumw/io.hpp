#pragma once

// Shared JSON schema. A matrix is {"rows":r,"cols":c,"data":[[re,im],...]}
// in row-major order; every file format below embeds matrices that way.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "mumw/basis.hpp"
#include "mumw/linalg.hpp"
#include "mumw/mum.hpp"
#include "mumw/verify.hpp"

namespace mumw::io {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
json real_matrix_to_json(const RealMatrix& m);

/// {"dim":d,"label":s,"g0":matrix,"grouped":[{"alpha":a,"k":k,"matrix":...}]}
json basis_to_json(const HermitianBasis& basis);
/// Validates orthonormality on load.
HermitianBasis basis_from_json(const json& j, double tol = kDefaultTol);

/// {"dim","N","kappa","t","positivity_enforced","operators":[{"alpha","k","matrix"}]}
json mums_to_json(const MumFamily& family);
MumFamily mums_from_json(const json& j);

/// {"dim":d,"hermitian":bool,"matrix":matrix}
json operator_to_json(const BipartiteOperator& op);
BipartiteOperator operator_from_json(const json& j);

json report_to_json(const CheckReport& report);
json detection_to_json(const DetectionResult& result);
json certificate_to_json(const DecompositionCertificate& cert);

/// Real parts as comma separated rows. Refuses matrices whose imaginary parts
/// exceed 1e-12.
std::string matrix_to_csv(const ComplexMatrix& m);

json read_json_file(const std::filesystem::path& path);
/// Writes with two-space indentation and a trailing newline.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string dump(const json& j);

}  // namespace mumw::io
