#pragma once

// Printed reference matrices (d = 3) with their scalar prefactors factored
// out, plus the recipes that regenerate each printed witness.

#include <array>
#include <string>
#include <vector>

#include "mumw/basis.hpp"
#include "mumw/linalg.hpp"

namespace mumw::golden {

struct Fixture {
  std::string name;
  std::string prefactor_text;
  double prefactor = 1.0;
  ComplexMatrix entries;  // the printed table, prefactor removed

  ComplexMatrix full() const { return prefactor * entries; }
};

Fixture cyclic_witness_w1();  // rotation S_1 on the diagonal Gell-Mann group
Fixture cyclic_witness_w2();  // rotation S_2

Fixture mub_witness_w1();
Fixture mub_witness_w2();
Fixture gellmann_witness_w3();
Fixture gellmann_witness_w4();
Fixture ppt_state_rho1();
Fixture ppt_state_rho2();
Fixture decomposition_a3();
Fixture decomposition_b3();
Fixture decomposition_a4();
Fixture decomposition_b4();

/// Valid replacement certificate for W~4 (the printed A4/B4 pair does not sum to W~4).
Fixture corrected_decomposition_a4();
Fixture corrected_decomposition_b4();

/// Which basis, group order and L regenerate a printed d = 3, N = 4 witness
/// with identity rotations.
struct Recipe {
  BasisLabel basis;
  std::array<int, 4> order;
  int L;
};

Recipe recipe_mub_w1();
Recipe recipe_mub_w2();
Recipe recipe_gellmann_w3();
Recipe recipe_gellmann_w4();

/// Regression values of Tr(W~ rho) at full scale, frozen from the first run.
inline constexpr double kExpectationW1Rho1 = -1.8660254037844384;  // -(2 + sqrt3)/2
inline constexpr double kExpectationW2Rho2 = -4.0;

}  // namespace mumw::golden
