#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mumw/rotations.hpp"
#include "mumw/witness.hpp"

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  // Records a sub-check; a false `ok` fails the criterion.
  void require(bool ok, const std::string& what);
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& all_criteria();

// The fixed pool of randomized specs shared by several criteria.
std::vector<mumw::WitnessSpec> random_specs();

}  // namespace acceptance
