#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "mumw/golden.hpp"
#include "mumw/io.hpp"
#include "mumw/random.hpp"

using namespace mumw;
using nlohmann::json;

TEST_CASE("matrix JSON round trip") {
  Rng rng = make_rng(1);
  const ComplexMatrix m = random_complex(3, rng);
  const json j = io::matrix_to_json(m);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 3);
  CHECK(j.at("data").size() == 9);
  CHECK(j.at("data")[1][0].get<double>() == m(0, 1).real());  // row-major
  CHECK(io::matrix_from_json(j) == m);
  CHECK(io::matrix_from_json(json::parse(io::dump(j))) == m);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2}, {"cols", 2}}), PreconditionError);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2}, {"cols", 2}, {"data", json::array({{1, 0}})}}),
                  DimensionError);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"data", json::array({{1, 0, 0}})}}),
                  PreconditionError);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 0}, {"cols", 1}, {"data", json::array()}}), PreconditionError);
}

TEST_CASE("basis round trip validates on load") {
  const HermitianBasis b = appendix_b_basis(3);
  const json j = io::basis_to_json(b);
  CHECK(j.at("label") == "appendix-b");
  CHECK(j.at("grouped").size() == 8);
  const HermitianBasis back = io::basis_from_json(j);
  CHECK(back.label() == BasisLabel::AppendixB);
  for (int a = 1; a <= 4; ++a)
    for (int k = 1; k <= 2; ++k) CHECK(max_abs_diff(back.element(a, k), b.element(a, k)) == 0.0);

  json broken = j;
  broken["grouped"][0]["matrix"]["data"][0][0] = 5.0;
  CHECK_THROWS_AS(io::basis_from_json(broken), PreconditionError);
  json missing = j;
  missing["grouped"].erase(3);
  CHECK_THROWS_AS(io::basis_from_json(missing), PreconditionError);
}

TEST_CASE("MUM family round trip") {
  const HermitianBasis b = gellmann_basis(3);
  const MumFamily fam = build_mums(b, kappa_opt(b), 3);
  const MumFamily back = io::mums_from_json(io::mums_to_json(fam));
  CHECK(back.count() == 3);
  CHECK(back.kappa() == fam.kappa());
  CHECK(back.t() == fam.t());
  CHECK(back.positivity_enforced());
  for (int a = 1; a <= 3; ++a)
    for (int k = 0; k < 3; ++k) CHECK(back.op(a, k) == fam.op(a, k));
}

TEST_CASE("operator round trip") {
  const BipartiteOperator w = reduction_witness(2);
  const BipartiteOperator back = io::operator_from_json(io::operator_to_json(w));
  CHECK(back.dim() == 2);
  CHECK(back.is_hermitian());
  CHECK(back.matrix() == w.matrix());
}

TEST_CASE("CSV export") {
  const std::string csv = io::matrix_to_csv(golden::decomposition_b3().entries);
  CHECK(csv.substr(0, csv.find('\n')) == "0,0,0,0,0,0,0,0,0");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = Complex(0.0, 1e-11);
  CHECK_THROWS_AS(io::matrix_to_csv(m), PreconditionError);
  m(0, 1) = Complex(0.0, 1e-13);
  CHECK_NOTHROW(io::matrix_to_csv(m));
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "mumw_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.json";
  io::write_text_file(path, io::dump(io::matrix_to_json(identity(2))));
  CHECK(io::matrix_from_json(io::read_json_file(path)) == identity(2));
  io::write_text_file(path, "{not json");
  CHECK_THROWS_AS(io::read_json_file(path), PreconditionError);
  CHECK_THROWS_AS(io::read_json_file(dir / "absent.json"), PreconditionError);
  std::filesystem::remove_all(dir);
  CHECK(io::dump(json{{"b", 1}, {"a", 2}}) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

TEST_CASE("reports") {
  CheckReport r;
  r.check = "x";
  r.samples = 3;
  r.pass = true;
  const json j = io::report_to_json(r);
  for (const char* key : {"check", "config", "samples", "worst_value", "threshold", "pass"}) CHECK(j.contains(key));
  const DecompositionCertificate c = verify_decomposition(
      BipartiteOperator::hermitian(golden::decomposition_a3().full() +
                                       partial_transpose(golden::decomposition_b3().full(), 3),
                                   3),
      golden::decomposition_a3().full(), golden::decomposition_b3().full());
  const json cj = io::certificate_to_json(c);
  CHECK(cj.contains("A"));
  CHECK(cj.contains("B"));
  CHECK(cj.at("valid") == true);
}
