#include "cli/app.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "mumw/error.hpp"
#include "mumw/io.hpp"

namespace mumw::cli {

namespace {

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--seed", c.seed, "Seed for every random draw (MUMW_SEED overrides)");
  cmd->add_option("--tol", c.tol, "Override the default tolerance of every check");
  cmd->add_option("--out", c.out, "Write the report here instead of stdout");
  cmd->add_option("--format", c.format, "Report format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                               {"csv", OutputFormat::Csv}}));
}

void add_basis_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--dim", c.dim, "Local dimension d");
  cmd->add_option("--basis", c.basis, "gellmann | appendix-b | mub");
  cmd->add_option("--basis-file", c.basis_file, "Basis JSON file (overrides --basis)");
  cmd->add_option("--alpha-order", c.alpha_order, "Permutation of the measurement groups, e.g. 3,4,1,2")
      ->delimiter(',');
}

void add_spec_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--kappa", c.kappa, "Sharpness, a number or 'opt'");
  cmd->add_option("--N", c.n_measurements, "Number of measurements (default d+1)");
  cmd->add_flag("--enforce-positivity,!--no-enforce-positivity", c.enforce_positivity,
                "Require kappa <= kappa_opt (default on)");
}

void emit(const CommandResult& result, const RunConfig& c, std::ostream& out) {
  const std::string text = c.format == OutputFormat::Csv ? result.csv : io::dump(result.document);
  if (c.out.empty()) {
    out << text;
  } else {
    io::write_text_file(c.out, text);
  }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Mutually unbiased measurements, positive maps and entanglement witnesses", "mumw"};
  app.require_subcommand(1);

  auto* basis = app.add_subcommand("basis", "Build a Hermitian operator basis and check orthonormality");
  add_basis_flags(basis, c);
  add_common(basis, c);

  auto* mums = app.add_subcommand("mums", "Build mutually unbiased measurements and check their relations");
  add_basis_flags(mums, c);
  add_spec_flags(mums, c);
  add_common(mums, c);

  auto* witness = app.add_subcommand("witness", "Build the witnesses W and W~");
  add_basis_flags(witness, c);
  add_spec_flags(witness, c);
  witness->add_option("--L", c.n_negative, "Number of groups entering with a minus sign (default N)");
  witness->add_option("--rot", c.rotations, "Rotation per group: id, perm:r, haar:seed, haar-neg:seed")
      ->delimiter(',');
  witness->add_option("--which", c.which, "Matrix written with --format csv: W or Wtilde");
  add_common(witness, c);

  auto* verify = app.add_subcommand("verify", "Run checks on a witness and optional state / decomposition");
  verify->add_option("--witness", c.witness_file, "Witness file (operator JSON or output of 'witness')")->required();
  verify->add_option("--which", c.which, "Operator of a 'witness' file to check: W or Wtilde");
  verify->add_option("--state", c.state_file, "State file");
  verify->add_option("--A", c.a_file, "Decomposition part A");
  verify->add_option("--B", c.b_file, "Decomposition part B (partially transposed)");
  verify->add_option("--checks", c.checks, "block-positivity, ppt, detection, decomposition, positivity")
      ->delimiter(',');
  verify->add_option("--samples", c.samples, "Random projectors for the positivity check");
  verify->add_option("--restarts", c.restarts, "See-saw restarts");
  add_common(verify, c);

  auto* reproduce = app.add_subcommand("reproduce", "Rebuild a printed example and compare entrywise");
  reproduce->add_option("example", c.example, "1 | 2 | 3 | 4 | appendixB")->required();
  add_common(reproduce, c);

  auto* explore = app.add_subcommand("explore", "Enumerate sign patterns of an N = d+1 witness family");
  add_basis_flags(explore, c);
  explore->add_option("--restarts", c.restarts, "See-saw restarts");
  add_common(explore, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    apply_seed_environment(c);
    const CommandResult result = dispatch(c);
    emit(result, c, out);
    return result.exit_code;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
  } catch (const PreconditionError& e) {
    report_error(err, "precondition", e.what());
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "input-format", e.what());
  }
  return kExitUsage;
}

}  // namespace mumw::cli
