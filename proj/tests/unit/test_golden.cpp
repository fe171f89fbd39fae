#include <doctest.h>

#include <cmath>

#include "mumw/golden.hpp"

using namespace mumw;

TEST_CASE("printed fixtures are Hermitian 9 x 9 tables with their prefactors") {
  const double s3 = std::sqrt(3.0);
  const golden::Fixture all[] = {golden::cyclic_witness_w1(), golden::cyclic_witness_w2(),
                                 golden::mub_witness_w1(),    golden::mub_witness_w2(),
                                 golden::gellmann_witness_w3(), golden::gellmann_witness_w4(),
                                 golden::ppt_state_rho1(),    golden::ppt_state_rho2(),
                                 golden::decomposition_a3(),  golden::decomposition_b3(),
                                 golden::decomposition_a4(),  golden::decomposition_b4()};
  for (const auto& f : all) {
    CHECK(f.entries.rows() == 9);
    CHECK(f.entries.cols() == 9);
    CHECK(hermiticity_residual(f.entries) == 0.0);
    CHECK(max_abs_diff(f.full(), f.prefactor * f.entries) == 0.0);
  }
  CHECK(golden::cyclic_witness_w1().prefactor == doctest::Approx(6 * (2 + s3)));
  CHECK(golden::mub_witness_w1().prefactor == doctest::Approx(2 * (2 + s3)));
  CHECK(golden::gellmann_witness_w3().prefactor == doctest::Approx(6 * (2 + s3)));
  CHECK(golden::ppt_state_rho2().prefactor == doctest::Approx(1 / (3 * (3 + s3))));
  CHECK(golden::ppt_state_rho1().entries.trace().real() == doctest::Approx(24.0));
  CHECK(golden::ppt_state_rho2().entries(0, 0).real() == doctest::Approx(s3 - 1));
  CHECK(golden::ppt_state_rho2().full().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("corrected decomposition differs from the printed one by rank-one terms") {
  const ComplexMatrix da = golden::corrected_decomposition_a4().entries - golden::decomposition_a4().entries;
  CHECK(da(0, 0).real() == 3.0);
  CHECK(da(0, 4).real() == -3.0);
  CHECK(is_psd(golden::corrected_decomposition_a4().entries));
  CHECK(is_psd(golden::corrected_decomposition_b4().entries));
  CHECK(hermitian_eigenvalues(golden::corrected_decomposition_b4().entries).maxCoeff() == doctest::Approx(6.0));
}

TEST_CASE("recipes") {
  CHECK(golden::recipe_mub_w1().basis == BasisLabel::MubDerived);
  CHECK(golden::recipe_gellmann_w3().order == std::array<int, 4>{2, 4, 1, 3});
  CHECK(golden::recipe_gellmann_w4().L == 2);
}
