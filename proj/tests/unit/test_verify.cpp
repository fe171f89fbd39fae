#include <doctest.h>

#include <cmath>

#include "mumw/golden.hpp"
#include "mumw/random.hpp"
#include "mumw/verify.hpp"
#include "support/oracles.hpp"

using namespace mumw;

namespace {

BipartiteOperator from_recipe(const golden::Recipe& r) {
  HermitianBasis b = r.basis == BasisLabel::MubDerived ? mub_derived_basis(3) : gellmann_basis(3);
  b = b.reordered(r.order);
  return witness_Wtilde(make_spec(b, 4, r.L, kappa_opt(b)));
}

BipartiteOperator state(const golden::Fixture& f) { return BipartiteOperator::hermitian(f.full(), 3); }

// Random separable state: mixture of product pure states.
ComplexMatrix random_separable(int d, int terms, Rng& rng) {
  ComplexMatrix rho = ComplexMatrix::Zero(d * d, d * d);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double total = 0.0;
  for (int i = 0; i < terms; ++i) {
    const double w = u(rng);
    rho += w * kron(haar_random_projector(d, rng), haar_random_projector(d, rng));
    total += w;
  }
  return rho / total;
}

}  // namespace

TEST_CASE("positivity condition by sampling") {
  SUBCASE("full MUB family, d = 3") {
    const CheckReport r = check_positivity_condition(make_spec(mub_derived_basis(3), 4, 4, 1.0), 2000, 1);
    CHECK(r.pass);
    CHECK(r.worst_value <= 0.5 + 1e-9);
    CHECK(r.threshold == doctest::Approx(0.5 + 1e-9));
    CHECK(r.samples == 2000);
  }
  SUBCASE("Gell-Mann d = 4, N = 3, L = 1") {
    const HermitianBasis b = gellmann_basis(4);
    const CheckReport r = check_positivity_condition(make_spec(b, 3, 1, kappa_opt(b)), 10000, 2);
    CHECK(r.pass);
    CHECK(r.config.at("unnormalized_worst").get<double>() <= r.config.at("unnormalized_bound").get<double>() + 1e-9);
  }
  SUBCASE("depolarizing channel alone") {
    const HermitianBasis b = gellmann_basis(3);
    const CheckReport r = check_positivity_condition(make_spec(b, 0, 0, kappa_opt(b)), 100, 3);
    CHECK(r.worst_value == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
  SUBCASE("same seed, same result") {
    const HermitianBasis b = appendix_b_basis(3);
    const WitnessSpec spec = make_spec(b, 4, 2, kappa_opt(b));
    CHECK(check_positivity_condition(spec, 500, 7).worst_value == check_positivity_condition(spec, 500, 7).worst_value);
  }
}

TEST_CASE("identities used in the positivity argument") {
  for (int d : {3, 4}) {
    const HermitianBasis b = appendix_b_basis(d);
    WitnessSpec spec = make_spec(b, d + 1, 2, kappa_opt(b));
    spec.rotations[1] = householder_rotation(d, 5, 1);
    const ProofIdentityReport r = check_proof_identities(spec, 500, 11);
    CHECK(r.max_identity_deviation() <= 1e-9);
    CHECK(r.overlap_excess <= 1e-9);
  }
}

TEST_CASE("see-saw block positivity") {
  SUBCASE("reduction witness has product minimum 0") {
    const ProductMinimum m = block_positivity_min(reduction_witness(3));
    CHECK(m.value >= -1e-8);
    CHECK(m.value <= 1e-8);
    CHECK(m.value == doctest::Approx(product_expectation(reduction_witness(3).matrix(), m.psi, m.phi)));
  }
  SUBCASE("-P+ at d = 2 against a Bloch-sphere grid") {
    const ComplexMatrix w = -max_entangled_projector(2);
    const double grid = oracle::product_grid_min(w, 12);
    const double seesaw = block_positivity_min(w, 2).value;
    CHECK(seesaw <= grid + 1e-12);
    CHECK(seesaw == doctest::Approx(grid).epsilon(1e-3));
    CHECK(seesaw == doctest::Approx(-0.5).epsilon(1e-10));
  }
  SUBCASE("indecomposable printed witness is block-positive despite a negative eigenvalue") {
    const BipartiteOperator w1 = from_recipe(golden::recipe_mub_w1());
    CHECK(min_eigenvalue(w1.matrix()) < -1.0);
    CHECK(block_positivity_min(w1).value >= -1e-8);
  }
  SUBCASE("random product states never go negative") {
    Rng rng = make_rng(21);
    for (const auto& r : {golden::recipe_mub_w1(), golden::recipe_mub_w2(), golden::recipe_gellmann_w3(),
                          golden::recipe_gellmann_w4()}) {
      const ComplexMatrix w = from_recipe(r).matrix();
      double worst = 1e9;
      for (int i = 0; i < 1000; ++i) {
        worst = std::min(worst, product_expectation(w, haar_random_vector(3, rng), haar_random_vector(3, rng)));
      }
      CHECK(worst >= -1e-8);
    }
  }
  SUBCASE("seeded runs are reproducible") {
    const ComplexMatrix w = from_recipe(golden::recipe_mub_w2()).matrix();
    SeesawOptions opt;
    opt.seed = 99;
    CHECK(block_positivity_min(w, 3, opt).value == block_positivity_min(w, 3, opt).value);
  }
}

TEST_CASE("PPT test") {
  Rng rng = make_rng(13);
  const ComplexMatrix product = kron(haar_random_projector(3, rng), haar_random_projector(3, rng));
  CHECK(is_ppt(BipartiteOperator::hermitian(product, 3)));
  CHECK(is_ppt(state(golden::ppt_state_rho1())));
  CHECK(is_ppt(state(golden::ppt_state_rho2())));
  CHECK_FALSE(is_ppt(BipartiteOperator::hermitian(max_entangled_projector(2), 2)));
  CHECK(min_eigenvalue(partial_transpose(max_entangled_projector(2), 2)) == doctest::Approx(-0.5));
}

TEST_CASE("detection") {
  const BipartiteOperator w1 = from_recipe(golden::recipe_mub_w1());
  const BipartiteOperator w2 = from_recipe(golden::recipe_mub_w2());
  SUBCASE("printed PPT states are detected") {
    const DetectionResult r1 = detect(w1, state(golden::ppt_state_rho1()));
    CHECK(r1.verdict == Verdict::DetectedPptEntangled);
    CHECK(r1.expectation == doctest::Approx(golden::kExpectationW1Rho1).epsilon(1e-12));
    const DetectionResult r2 = detect(w2, state(golden::ppt_state_rho2()));
    CHECK(r2.verdict == Verdict::DetectedPptEntangled);
    CHECK(r2.expectation == doctest::Approx(golden::kExpectationW2Rho2).epsilon(1e-12));
    CHECK(r2.psd);
    CHECK(r2.trace == doctest::Approx(1.0));
  }
  SUBCASE("maximally mixed state is not detected") {
    const DetectionResult r = detect(reduction_witness(3), BipartiteOperator::hermitian(identity(9) / 9.0, 3));
    CHECK(r.verdict == Verdict::NotDetected);
    CHECK(r.expectation > 0.0);
  }
  SUBCASE("NPT state") {
    const DetectionResult r = detect(reduction_witness(3), BipartiteOperator::hermitian(max_entangled_projector(3), 3));
    CHECK(r.verdict == Verdict::DetectedNpt);
  }
  SUBCASE("invalid states") {
    const DetectionResult scaled = detect(w1, BipartiteOperator(0.9 * golden::ppt_state_rho1().full(), 3));
    CHECK(scaled.verdict == Verdict::InvalidState);
    ComplexMatrix skew = golden::ppt_state_rho1().full();
    skew(0, 1) += 0.1;
    CHECK(detect(w1, BipartiteOperator(skew, 3)).verdict == Verdict::InvalidState);
    CHECK_THROWS_AS(detect(w1, BipartiteOperator(identity(4) / 4.0, 2)), DimensionError);
  }
  CHECK(to_string(Verdict::DetectedPptEntangled) == "detected-PPT-entangled");
  CHECK(to_string(Verdict::InvalidState) == "invalid-state");
}

TEST_CASE("decomposition certificates") {
  const BipartiteOperator w1 = from_recipe(golden::recipe_mub_w1());
  const BipartiteOperator w3 = from_recipe(golden::recipe_gellmann_w3());
  const BipartiteOperator w4 = from_recipe(golden::recipe_gellmann_w4());
  SUBCASE("printed A3, B3") {
    const DecompositionCertificate c =
        verify_decomposition(w3, golden::decomposition_a3().full(), golden::decomposition_b3().full());
    CHECK(c.valid());
    CHECK(c.residual <= 1e-9);
  }
  SUBCASE("printed A4, B4 leave a residual of 3 (printed scale) at (0,4) and (1,3)") {
    const golden::Fixture a = golden::decomposition_a4(), b = golden::decomposition_b4();
    const ComplexMatrix r = w4.matrix() / a.prefactor - a.entries - partial_transpose(b.entries, 3);
    CHECK(r(0, 4).real() == doctest::Approx(-3.0));
    CHECK(r(1, 3).real() == doctest::Approx(3.0));
    CHECK_FALSE(verify_decomposition(w4, a.full(), b.full()).valid());
    CHECK(is_psd(a.entries));
    CHECK(is_psd(b.entries));
  }
  SUBCASE("corrected A4, B4") {
    const DecompositionCertificate c = verify_decomposition(w4, golden::corrected_decomposition_a4().full(),
                                                            golden::corrected_decomposition_b4().full());
    CHECK(c.valid());
  }
  SUBCASE("mismatched pair") {
    const DecompositionCertificate c =
        verify_decomposition(w1, golden::decomposition_a3().full(), golden::decomposition_b3().full());
    CHECK_FALSE(c.valid());
    CHECK(c.residual > 1.0);
  }
  SUBCASE("search") {
    const auto red = search_decomposition(reduction_witness(3));
    REQUIRE(red.has_value());
    CHECK(verify_decomposition(reduction_witness(3), red->a, red->b).valid());
    const auto c3 = search_decomposition(w3);
    REQUIRE(c3.has_value());
    CHECK(c3->valid());
    const auto c4 = search_decomposition(w4);
    REQUIRE(c4.has_value());
    CHECK(c4->valid());
    // no certificate for the indecomposable witness within the budget (expected, not a proof)
    CHECK_FALSE(search_decomposition(w1, 2000).has_value());
  }
}

TEST_CASE("decomposable witnesses never detect sampled PPT states") {
  Rng rng = make_rng(31);
  const BipartiteOperator w3 = from_recipe(golden::recipe_gellmann_w3());
  const BipartiteOperator w4 = from_recipe(golden::recipe_gellmann_w4());
  std::vector<ComplexMatrix> states = {golden::ppt_state_rho1().full(), golden::ppt_state_rho2().full()};
  for (int i = 0; i < 200; ++i) states.push_back(random_separable(3, 1 + i % 5, rng));
  for (const ComplexMatrix& rho : states) {
    REQUIRE(is_ppt(BipartiteOperator::hermitian(rho, 3)));
    CHECK(trace_product(w3.matrix(), rho).real() >= -1e-8);
    CHECK(trace_product(w4.matrix(), rho).real() >= -1e-8);
  }
}
