#include "cli/run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace mumw::cli {

std::optional<double> parse_kappa(const std::string& text) {
  if (text == "opt") return std::nullopt;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("--kappa must be a number or 'opt', got '" + text + "'");
  return value;
}

void apply_seed_environment(RunConfig& config) {
  const char* env = std::getenv("MUMW_SEED");
  if (env == nullptr || *env == '\0') return;
  std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("MUMW_SEED must be an unsigned integer, got '" + std::string(text) + "'");
  }
  config.seed = value;
}

}  // namespace mumw::cli
