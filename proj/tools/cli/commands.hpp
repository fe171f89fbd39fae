#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cli/run_config.hpp"
#include "mumw/basis.hpp"
#include "mumw/witness.hpp"

namespace mumw::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  nlohmann::json document;
  std::string csv;  // rendering used with --format csv
  int exit_code = kExitPass;
};

/// Basis named by --basis/--basis-file at --dim, regrouped by --alpha-order.
HermitianBasis load_basis(const RunConfig& config);

/// Validated WitnessSpec from the flags (rotations default to identities,
/// N to d+1, L to N, kappa to kappa_opt).
WitnessSpec build_spec(const RunConfig& config, const HermitianBasis& basis);

/// Rebuilds the spec recorded in a witness file's "provenance" block.
WitnessSpec spec_from_provenance(const nlohmann::json& provenance);

CommandResult cmd_basis(const RunConfig& config);
CommandResult cmd_mums(const RunConfig& config);
CommandResult cmd_witness(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_reproduce(const RunConfig& config);
CommandResult cmd_explore(const RunConfig& config);

CommandResult dispatch(const RunConfig& config);

}  // namespace mumw::cli
