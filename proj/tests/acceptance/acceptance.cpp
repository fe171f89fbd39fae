// Acceptance suite: one pass/fail line per criterion.
//   acceptance                 run everything
//   acceptance --criterion 6   run one criterion

#include <algorithm>
#include <cstdio>
#include <exception>
#include <vector>

#include <CLI11.hpp>

#include "acceptance/criteria.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number (repeatable)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : acceptance::all_criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    acceptance::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.summary = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && out.pass;
    std::printf("[%s] criterion %2d | %s | %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.summary.c_str());
    for (const auto& f : out.failures) std::printf("       failed: %s\n", f.c_str());
    for (const auto& n : out.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
