#include <doctest.h>

#include <cmath>

#include "mumw/golden.hpp"
#include "mumw/random.hpp"
#include "mumw/verify.hpp"
#include "mumw/witness.hpp"
#include "support/oracles.hpp"

using namespace mumw;

namespace {

double sq(double x) { return x * x; }

WitnessSpec cyclic_spec(const HermitianBasis& b, int r) {
  const int d = b.dim();
  WitnessSpec spec = make_spec(b, d + 1, d + 1, kappa_opt(b));
  spec.rotations[d] = permutation_rotation(d, r);
  return spec;
}

}  // namespace

TEST_CASE("single-measurement channel") {
  const HermitianBasis b = gellmann_basis(3);
  const MumFamily fam = build_mums(b, kappa_opt(b), 4);
  SUBCASE("identity input") {
    for (int a = 1; a <= 4; ++a) {
      CHECK(max_abs_diff(apply_phi_alpha(fam, a, identity_rotation(3), identity(3)), identity(3)) < 1e-12);
    }
  }
  SUBCASE("trace preservation") {
    Rng rng = make_rng(2);
    for (int i = 0; i < 10; ++i) {
      const ComplexMatrix x = random_complex(3, rng);
      const StarRotation o = householder_rotation(3, static_cast<std::uint64_t>(i), 1);
      CHECK(std::abs(apply_phi_alpha(fam, 1 + i % 4, o, x).trace() - x.trace()) < 1e-12);
    }
  }
  SUBCASE("purity of the output follows the overlap formula") {
    // Tr(Phi_a[P]^2) = (1-k)/(d-1) + (dk-1)/(d-1) sum_m Tr(P_m P)^2
    Rng rng = make_rng(9);
    for (double kappa : {1.0, 0.8}) {
      const int d = 2;
      const MumFamily mub = build_mums(mub_derived_basis(d), kappa, 3);
      std::vector<ComplexMatrix> inputs = {mub.op(1, 0)};
      for (int i = 0; i < 5; ++i) inputs.push_back(haar_random_projector(d, rng));
      for (const ComplexMatrix& p : inputs) {
        const ComplexMatrix out = apply_phi_alpha(mub, 1, identity_rotation(d), p);
        double overlaps = 0.0;
        for (int m = 0; m < d; ++m) overlaps += sq(trace_product(mub.op(1, m), p).real());
        const double expected = (1 - kappa) / (d - 1) + (d * kappa - 1) / (d - 1) * overlaps;
        CHECK(trace_product(out, out).real() == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(apply_phi_alpha(fam, 1, identity_rotation(3), identity(2)), DimensionError);
}

TEST_CASE("positive map") {
  SUBCASE("trace preservation for random specs") {
    Rng rng = make_rng(4);
    for (int i = 0; i < 10; ++i) {
      const int d = 3 + i % 2;
      const HermitianBasis b = i % 3 == 0 ? gellmann_basis(d) : appendix_b_basis(d);
      const int n = 1 + i % (d + 1);
      const WitnessSpec spec = make_spec(b, n, i % (n + 1), kappa_opt(b));
      const ComplexMatrix x = random_complex(d, rng);
      CHECK(std::abs(apply_phi(spec, x).trace() - x.trace()) < 1e-12);
    }
  }
  SUBCASE("reduction map from a full MUB family") {
    Rng rng = make_rng(5);
    for (double kappa : {1.0, 0.7}) {
      const WitnessSpec spec = make_spec(mub_derived_basis(2), 3, 3, kappa);
      for (int i = 0; i < 5; ++i) {
        const ComplexMatrix x = random_complex(2, rng);
        CHECK(max_abs_diff(apply_phi(spec, x), oracle::reduction_map(x)) < 1e-12);
      }
    }
  }
  SUBCASE("kappa = 1/d is rejected") {
    WitnessSpec spec = make_spec(gellmann_basis(3), 4, 4, 1.0 / 3);
    CHECK_THROWS_AS(spec.validate(), PreconditionError);
    CHECK_THROWS_AS(PositiveMap{spec}, PreconditionError);
  }
  SUBCASE("spec validation") {
    const HermitianBasis b = gellmann_basis(3);
    CHECK_THROWS_AS(make_spec(b, 5, 2, 0.5).validate(), PreconditionError);
    CHECK_THROWS_AS(make_spec(b, 3, 4, 0.5).validate(), PreconditionError);
    WitnessSpec neg = make_spec(b, 4, 2, 0.5);
    neg.rotations[0] = householder_rotation(3, 1, -1);
    CHECK_THROWS_AS(neg.validate(), PreconditionError);
    WitnessSpec short_list = make_spec(b, 4, 2, 0.5);
    short_list.rotations.pop_back();
    CHECK_THROWS_AS(short_list.validate(), PreconditionError);
    CHECK(make_spec(b, 4, 1, 0.5).depolarizing_weight() == doctest::Approx(3 * 0.5 - 1 - 4 + 2));
  }
}

TEST_CASE("W against the Choi matrix of the map") {
  Rng rng = make_rng(6);
  for (int i = 0; i < 8; ++i) {
    const int d = 3 + i % 2;
    const HermitianBasis b = i % 2 ? gellmann_basis(d) : appendix_b_basis(d);
    const int n = 1 + static_cast<int>(rng() % (d + 1));
    const int l = static_cast<int>(rng() % (n + 1));
    WitnessSpec spec = make_spec(b, n, l, i % 4 < 2 ? kappa_opt(b) : 0.5 * (1.0 / d + kappa_opt(b)));
    for (int a = 0; a < n; ++a) spec.rotations[a] = householder_rotation(d, rng(), 1);
    const PositiveMap phi(spec);
    const ComplexMatrix choi = choi_matrix([&](const ComplexMatrix& x) { return phi(x); }, d);
    const BipartiteOperator w = witness_W(spec);
    CHECK(w.is_hermitian());
    CHECK(max_abs_diff(w.matrix(), (d * spec.kappa - 1) * choi) < 1e-10);
  }
}

TEST_CASE("W for a full MUB family is proportional to the reduction witness") {
  const WitnessSpec spec = make_spec(mub_derived_basis(3), 4, 4, 1.0);
  const ComplexMatrix w = witness_W(spec).matrix();
  const ComplexMatrix r = reduction_witness(3).matrix();
  const double ratio = w(1, 1).real() / r(1, 1).real();
  CHECK(max_abs_diff(w, ratio * r) < 1e-12);
  CHECK(ratio * wtilde_over_w(3, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("W~") {
  SUBCASE("independent of kappa and proportional to W") {
    Rng rng = make_rng(12);
    for (int i = 0; i < 6; ++i) {
      const int d = 3 + i % 3;
      const HermitianBasis b = i % 2 ? gellmann_basis(d) : appendix_b_basis(d);
      const int n = 1 + i % (d + 1);
      const int l = i % (n + 1);
      WitnessSpec a = make_spec(b, n, l, kappa_opt(b));
      for (int k = 0; k < n; ++k) a.rotations[k] = householder_rotation(d, rng(), 1);
      WitnessSpec c = a;
      c.kappa = 0.5 * (1.0 / d + kappa_opt(b));
      const ComplexMatrix wa = witness_Wtilde(a).matrix();
      CHECK(max_abs_diff(wa, witness_Wtilde(c).matrix()) <= 1e-10);
      CHECK(max_abs_diff(wa, wtilde_over_w(d, a.kappa) * witness_W(a).matrix()) <= 1e-9);
      CHECK(max_abs_diff(wa, witness_Wtilde(b, l, a.rotations).matrix()) <= 1e-10);
    }
  }
  SUBCASE("printed cyclic witnesses") {
    const HermitianBasis b = gellmann_basis(3);
    const golden::Fixture g1 = golden::cyclic_witness_w1(), g2 = golden::cyclic_witness_w2();
    CHECK(max_abs_diff(witness_Wtilde(cyclic_spec(b, 1)).matrix() / g1.prefactor, g1.entries) <= 1e-12);
    CHECK(max_abs_diff(witness_Wtilde(cyclic_spec(b, 2)).matrix() / g2.prefactor, g2.entries) <= 1e-12);
  }
  SUBCASE("identity rotations on Gell-Mann give the reduction witness and its spectrum") {
    const HermitianBasis b = gellmann_basis(3);
    const BipartiteOperator w = witness_Wtilde(make_spec(b, 4, 4, kappa_opt(b)));
    CHECK(max_abs_diff(w.matrix(), reduction_witness(3).matrix()) < 1e-12);
    CHECK(min_eigenvalue(w.matrix()) == doctest::Approx(-3 * sq(std::sqrt(3.0) + 1) * 2));
  }
}

TEST_CASE("closed-form reference witnesses") {
  SUBCASE("reduction witness") {
    const double s = std::sqrt(2.0) + 1;
    const ComplexMatrix expected = 2 * s * s * (identity(4) - 2.0 * max_entangled_projector(2));
    CHECK(max_abs_diff(reduction_witness(2).matrix(), expected) < 1e-13);
    for (int d = 2; d <= 5; ++d) {
      const double sd = std::sqrt(static_cast<double>(d)) + 1;
      CHECK(reduction_witness(d).matrix().trace().real() == doctest::Approx(d * sd * sd * (d * d - d)));
    }
  }
  SUBCASE("shift witness") {
    for (int d = 2; d <= 5; ++d) CHECK(max_abs_diff(shift_witness(d, 0).matrix(), reduction_witness(d).matrix()) < 1e-12);
    CHECK(max_abs_diff(shift_witness(3, 1).matrix(), witness_Wtilde(cyclic_spec(appendix_b_basis(3), 1)).matrix()) <
          1e-9);
    CHECK(max_abs_diff(shift_witness(5, 2).matrix(), witness_Wtilde(cyclic_spec(appendix_b_basis(5), 2)).matrix()) <
          1e-9);
    CHECK(max_abs_diff(shift_witness(3, 1).matrix(), golden::cyclic_witness_w1().full()) < 1e-9);
    CHECK_THROWS_AS(shift_witness(3, 3), PreconditionError);
  }
}

TEST_CASE("Q blocks") {
  SUBCASE("identity rotation") {
    for (int d = 2; d <= 5; ++d) {
      const RealMatrix q = q_block(identity_rotation(d));
      CHECK((q - ccnr_scale(d) * RealMatrix::Identity(d - 1, d - 1)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("S_1 at d = 3") {
    const RealMatrix q = q_block(permutation_rotation(3, 1));
    const double scale = 9 * std::pow(std::sqrt(3.0) + 1, 4);
    CHECK((q.transpose() * q - scale * RealMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() / scale < 1e-12);
  }
  SUBCASE("random rotations and the G-expansion of J") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const int d = 4;
      const StarRotation o = householder_rotation(d, seed, 1);
      const RealMatrix q = q_block(o);
      const double scale = sq(ccnr_scale(d));
      CHECK((q.transpose() * q - scale * RealMatrix::Identity(d - 1, d - 1)).cwiseAbs().maxCoeff() / scale < 1e-8);
      const HermitianBasis b = appendix_b_basis(d);
      const int alpha = 1 + static_cast<int>(seed % (d + 1));
      CHECK(max_abs_diff(j_operator_from_q(b, alpha, q), j_operator(build_F(b), alpha, o)) < 1e-10);
    }
  }
}

TEST_CASE("CCNR-class witnesses") {
  const HermitianBasis g = gellmann_basis(3);
  SUBCASE("Q = 0") {
    CHECK(max_abs_diff(ccnr_witness(g, RealMatrix::Zero(9, 9)).matrix(), identity(9)) == 0.0);
  }
  SUBCASE("Q = I is block-positive") {
    const BipartiteOperator w = ccnr_witness(g, RealMatrix::Identity(9, 9));
    CHECK(block_positivity_min(w).value >= -1e-8);
    // sum_mu G_mu^T (x) G_mu = d P_+ for any orthonormal Hermitian basis
    CHECK(max_abs_diff(w.matrix(), identity(9) - 3.0 * max_entangled_projector(3)) < 1e-12);
  }
  SUBCASE("assembled block-diagonal Q reproduces W~") {
    for (int d : {3, 4}) {
      const HermitianBasis b = appendix_b_basis(d);
      WitnessSpec spec = cyclic_spec(b, 1);
      spec.rotations[0] = householder_rotation(d, 3, 1);
      const RealMatrix q = assemble_block_q(spec.rotations);
      CHECK((q.transpose() * q - RealMatrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(max_abs_diff(ccnr_witness(b, q).matrix(), witness_Wtilde(spec).matrix() / ccnr_scale(d)) < 1e-9);
    }
  }
  SUBCASE("Q^T Q > I is rejected") {
    CHECK_THROWS_AS(ccnr_witness(g, 1.01 * RealMatrix::Identity(9, 9)), PreconditionError);
  }
}
