#include "mumw/golden.hpp"

#include <cmath>
#include <initializer_list>

namespace mumw::golden {

namespace {

const double kSqrt3 = std::sqrt(3.0);

ComplexMatrix table(std::initializer_list<std::initializer_list<double>> rows) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows.size()), 9);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Fixture fixture(std::string name, std::string prefactor_text, double prefactor, ComplexMatrix entries) {
  return Fixture{std::move(name), std::move(prefactor_text), prefactor, std::move(entries)};
}

constexpr double kScale6 = 6.0;  // 6(2+sqrt3) = d(sqrt d+1)^2 at d = 3
constexpr double kScale2 = 2.0;  // 2(2+sqrt3) = (sqrt d+1)^2 at d = 3

}  // namespace

Fixture cyclic_witness_w1() {
  return fixture("W~1 (S_1)", "6(2+sqrt3)", kScale6 * (2 + kSqrt3),
                 table({{1, 0, 0, 0, -1, 0, 0, 0, -1},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 1, 0, 0, 0, 0, 0},
                        {-1, 0, 0, 0, 1, 0, 0, 0, -1},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 1, 0},
                        {-1, 0, 0, 0, -1, 0, 0, 0, 1}}));
}

Fixture cyclic_witness_w2() {
  return fixture("W~2 (S_2)", "6(2+sqrt3)", kScale6 * (2 + kSqrt3),
                 table({{1, 0, 0, 0, -1, 0, 0, 0, -1},
                        {0, 1, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {-1, 0, 0, 0, 1, 0, 0, 0, -1},
                        {0, 0, 0, 0, 0, 1, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {-1, 0, 0, 0, -1, 0, 0, 0, 1}}));
}

Fixture mub_witness_w1() {
  return fixture("W~1 (MUB, L=2)", "2(2+sqrt3)", kScale2 * (2 + kSqrt3),
                 table({{0, 0, 0, 0, 1, 0, 0, 0, 1},
                        {0, 3, 0, 0, 0, -2, -2, 0, 0},
                        {0, 0, 3, -2, 0, 0, 0, -2, 0},
                        {0, 0, -2, 3, 0, 0, 0, -2, 0},
                        {1, 0, 0, 0, 0, 0, 0, 0, 1},
                        {0, -2, 0, 0, 0, 3, -2, 0, 0},
                        {0, -2, 0, 0, 0, -2, 3, 0, 0},
                        {0, 0, -2, -2, 0, 0, 0, 3, 0},
                        {1, 0, 0, 0, 1, 0, 0, 0, 0}}));
}

Fixture mub_witness_w2() {
  return fixture("W~2 (MUB, L=2)", "2(2+sqrt3)", kScale2 * (2 + kSqrt3),
                 table({{4, 0, 0, 0, -1, 0, 0, 0, -1},
                        {0, 1, 0, 0, 0, 2, 2, 0, 0},
                        {0, 0, 1, 2, 0, 0, 0, 2, 0},
                        {0, 0, 2, 1, 0, 0, 0, 2, 0},
                        {-1, 0, 0, 0, 4, 0, 0, 0, -1},
                        {0, 2, 0, 0, 0, 1, 2, 0, 0},
                        {0, 2, 0, 0, 0, 2, 1, 0, 0},
                        {0, 0, 2, 2, 0, 0, 0, 1, 0},
                        {-1, 0, 0, 0, -1, 0, 0, 0, 4}}));
}

Fixture gellmann_witness_w3() {
  return fixture("W~3 (Gell-Mann)", "6(2+sqrt3)", kScale6 * (2 + kSqrt3),
                 table({{0, 0, 0, 0, 0, 0, 0, 0, 1},
                        {0, 1, 0, -1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 0, 0, 0},
                        {0, -1, 0, 1, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {0, 0, 0, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {1, 0, 0, 0, 0, 0, 0, 0, 0}}));
}

Fixture gellmann_witness_w4() {
  return fixture("W~4 (Gell-Mann)", "2(2+sqrt3)", kScale2 * (2 + kSqrt3),
                 table({{4, 0, 0, 0, -3, 0, 0, 0, 0},
                        {0, 1, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 3, 0, 0},
                        {0, 0, 0, 1, 0, 0, 0, 0, 0},
                        {-3, 0, 0, 0, 4, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 3, 0},
                        {0, 0, 3, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 3, 0, 1, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 4}}));
}

Fixture ppt_state_rho1() {
  return fixture("rho1", "1/24", 1.0 / 24.0,
                 table({{4, 0, 0, 0, 1, 0, 0, 0, 1},
                        {0, 2, 0, 0, 0, 2, 2, 0, 0},
                        {0, 0, 2, 2, 0, 0, 0, 2, 0},
                        {0, 0, 2, 2, 0, 0, 0, 2, 0},
                        {1, 0, 0, 0, 4, 0, 0, 0, 1},
                        {0, 2, 0, 0, 0, 2, 2, 0, 0},
                        {0, 2, 0, 0, 0, 2, 2, 0, 0},
                        {0, 0, 2, 2, 0, 0, 0, 2, 0},
                        {1, 0, 0, 0, 1, 0, 0, 0, 4}}));
}

Fixture ppt_state_rho2() {
  const double s = kSqrt3 - 1.0;
  return fixture("rho2", "1/(3(3+sqrt3))", 1.0 / (3.0 * (3.0 + kSqrt3)),
                 table({{s, 0, 0, 0, s, 0, 0, 0, s},
                        {0, 2, 0, 0, 0, -1, -1, 0, 0},
                        {0, 0, 2, -1, 0, 0, 0, -1, 0},
                        {0, 0, -1, 2, 0, 0, 0, -1, 0},
                        {s, 0, 0, 0, s, 0, 0, 0, s},
                        {0, -1, 0, 0, 0, 2, -1, 0, 0},
                        {0, -1, 0, 0, 0, -1, 2, 0, 0},
                        {0, 0, -1, -1, 0, 0, 0, 2, 0},
                        {s, 0, 0, 0, s, 0, 0, 0, s}}));
}

Fixture decomposition_a3() {
  return fixture("A3", "6(2+sqrt3)", kScale6 * (2 + kSqrt3),
                 table({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 1, 0, -1, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, -1, 0, 1, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0}}));
}

Fixture decomposition_b3() {
  return fixture("B3", "6(2+sqrt3)", kScale6 * (2 + kSqrt3),
                 table({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0}}));
}

Fixture decomposition_a4() {
  return fixture("A4", "2(2+sqrt3)", kScale2 * (2 + kSqrt3),
                 table({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 1, 0, -1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 1, 0, 0},
                        {0, -1, 0, 1, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {0, 0, 1, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 1, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0}}));
}

Fixture decomposition_b4() {
  return fixture("B4", "2(2+sqrt3)", kScale2 * (2 + kSqrt3),
                 table({{4, 0, 0, 0, -2, 0, 0, 0, 2},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {-2, 0, 0, 0, 4, 0, 0, 0, 2},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 0, 0},
                        {2, 0, 0, 0, 2, 0, 0, 0, 4}}));
}

Fixture corrected_decomposition_a4() {
  Fixture f = decomposition_a4();
  f.name = "A4 (corrected)";
  // adds 3 (e0 - e4)(e0 - e4)^T
  f.entries(0, 0) += 3.0;
  f.entries(4, 4) += 3.0;
  f.entries(0, 4) -= 3.0;
  f.entries(4, 0) -= 3.0;
  return f;
}

Fixture corrected_decomposition_b4() {
  ComplexVector v = ComplexVector::Zero(9);
  v(0) = 1.0;
  v(4) = 1.0;
  v(8) = 2.0;
  return fixture("B4 (corrected)", "2(2+sqrt3)", kScale2 * (2 + kSqrt3), outer(v));
}

Recipe recipe_mub_w1() { return {BasisLabel::MubDerived, {1, 2, 3, 4}, 2}; }
Recipe recipe_mub_w2() { return {BasisLabel::MubDerived, {3, 4, 1, 2}, 2}; }
Recipe recipe_gellmann_w3() { return {BasisLabel::GellMann, {2, 4, 1, 3}, 2}; }
Recipe recipe_gellmann_w4() { return {BasisLabel::GellMann, {1, 2, 3, 4}, 2}; }

}  // namespace mumw::golden
