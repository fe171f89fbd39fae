#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mumw::cli {

/// Thrown for malformed flags or inconsistent flag combinations (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;  // basis | mums | witness | verify | reproduce | explore

  int dim = 3;
  std::string basis = "gellmann";
  std::string basis_file;
  std::string kappa = "opt";  // a number or "opt"
  std::optional<int> n_measurements;
  std::optional<int> n_negative;
  std::vector<std::string> rotations;
  std::vector<int> alpha_order;
  bool enforce_positivity = true;

  std::string witness_file;
  std::string which = "Wtilde";  // operator taken from a witness-command file
  std::string state_file;
  std::string a_file;
  std::string b_file;
  std::vector<std::string> checks;
  long long samples = 10000;
  int restarts = 32;

  std::string example;

  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  OutputFormat format = OutputFormat::Json;
};

/// Parses "1.5" or "opt"; returns nullopt for "opt".
std::optional<double> parse_kappa(const std::string& text);

/// Applies MUMW_SEED from the environment, when set, over --seed.
void apply_seed_environment(RunConfig& config);

}  // namespace mumw::cli
