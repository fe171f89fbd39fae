#include "mumw/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mumw::io {

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json real_matrix_to_json(const RealMatrix& m) { return matrix_to_json(m.cast<Complex>()); }

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw PreconditionError("matrix JSON must have rows, cols and data");
  }
  const auto rows = j.at("rows").get<long long>();
  const auto cols = j.at("cols").get<long long>();
  if (rows < 1 || cols < 1) throw PreconditionError("matrix JSON: rows and cols must be >= 1");
  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols) {
    throw DimensionError("matrix JSON: data must hold rows*cols entries");
  }
  ComplexMatrix m(rows, cols);
  for (long long idx = 0; idx < rows * cols; ++idx) {
    const auto& e = data[static_cast<std::size_t>(idx)];
    if (!e.is_array() || e.size() != 2) throw PreconditionError("matrix JSON: entries must be [re, im] pairs");
    m(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

json basis_to_json(const HermitianBasis& basis) {
  json grouped = json::array();
  for (int alpha = 1; alpha <= basis.group_count(); ++alpha) {
    for (int k = 1; k < basis.dim(); ++k) {
      grouped.push_back({{"alpha", alpha}, {"k", k}, {"matrix", matrix_to_json(basis.element(alpha, k))}});
    }
  }
  return {{"dim", basis.dim()},
          {"label", std::string(to_string(basis.label()))},
          {"g0", matrix_to_json(basis.g0())},
          {"grouped", std::move(grouped)}};
}

HermitianBasis basis_from_json(const json& j, double tol) {
  const int d = j.at("dim").get<int>();
  if (d < 2) throw PreconditionError("basis JSON: dim must be >= 2");
  const auto label = basis_label_from_string(j.value("label", std::string("custom")));
  std::vector<HermitianBasis::Group> groups(d + 1, HermitianBasis::Group(d - 1));
  std::vector<std::vector<bool>> seen(d + 1, std::vector<bool>(d - 1, false));
  for (const auto& e : j.at("grouped")) {
    const int alpha = e.at("alpha").get<int>();
    const int k = e.at("k").get<int>();
    if (alpha < 1 || alpha > d + 1 || k < 1 || k > d - 1) {
      throw PreconditionError("basis JSON: entry (alpha, k) out of range");
    }
    if (seen[alpha - 1][k - 1]) throw PreconditionError("basis JSON: duplicate entry (alpha, k)");
    seen[alpha - 1][k - 1] = true;
    groups[alpha - 1][k - 1] = matrix_from_json(e.at("matrix"));
  }
  for (const auto& row : seen) {
    for (bool s : row) {
      if (!s) throw PreconditionError("basis JSON: missing grouped entries");
    }
  }
  if (j.contains("g0")) {
    const ComplexMatrix g0 = matrix_from_json(j.at("g0"));
    const ComplexMatrix expected = ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d));
    if (g0.rows() != d || g0.cols() != d || max_abs(g0 - expected) > tol) {
      throw PreconditionError("basis JSON: g0 must equal I/sqrt(d)");
    }
  }
  return HermitianBasis::checked(d, label, std::move(groups), tol);
}

json mums_to_json(const MumFamily& family) {
  json ops = json::array();
  for (int a = 1; a <= family.count(); ++a) {
    for (int k = 0; k < family.dim(); ++k) {
      ops.push_back({{"alpha", a}, {"k", k}, {"matrix", matrix_to_json(family.op(a, k))}});
    }
  }
  return {{"dim", family.dim()},
          {"N", family.count()},
          {"kappa", family.kappa()},
          {"t", family.t()},
          {"positivity_enforced", family.positivity_enforced()},
          {"operators", std::move(ops)}};
}

MumFamily mums_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  const int n = j.at("N").get<int>();
  if (d < 2 || n < 1 || n > d + 1) throw PreconditionError("MUM JSON: invalid dim or N");
  std::vector<std::vector<ComplexMatrix>> ops(n, std::vector<ComplexMatrix>(d));
  std::size_t count = 0;
  for (const auto& e : j.at("operators")) {
    const int a = e.at("alpha").get<int>();
    const int k = e.at("k").get<int>();
    if (a < 1 || a > n || k < 0 || k >= d) throw PreconditionError("MUM JSON: (alpha, k) out of range");
    ops[a - 1][k] = matrix_from_json(e.at("matrix"));
    ++count;
  }
  if (count != static_cast<std::size_t>(n) * d) throw PreconditionError("MUM JSON: expected N*d operators");
  return MumFamily(d, std::move(ops), j.at("kappa").get<double>(), j.at("t").get<double>(),
                   j.value("positivity_enforced", true));
}

json operator_to_json(const BipartiteOperator& op) {
  return {{"dim", op.dim()}, {"hermitian", op.is_hermitian()}, {"matrix", matrix_to_json(op.matrix())}};
}

BipartiteOperator operator_from_json(const json& j) {
  ComplexMatrix m = matrix_from_json(j.at("matrix"));
  int d = j.contains("dim") ? j.at("dim").get<int>() : exact_sqrt(m.rows());
  if (d < 1) throw DimensionError("operator JSON: matrix size is not a perfect square");
  if (j.value("hermitian", false)) return BipartiteOperator::hermitian(std::move(m), d, kDefaultTol * std::max(1.0, max_abs(m)));
  return BipartiteOperator(std::move(m), d);
}

json report_to_json(const CheckReport& report) {
  return {{"check", report.check},
          {"config", report.config},
          {"samples", report.samples},
          {"worst_value", report.worst_value},
          {"threshold", report.threshold},
          {"pass", report.pass}};
}

json detection_to_json(const DetectionResult& r) {
  return {{"expectation", r.expectation},
          {"ppt", r.ppt},
          {"psd", r.psd},
          {"trace", r.trace},
          {"verdict", std::string(to_string(r.verdict))}};
}

json certificate_to_json(const DecompositionCertificate& c) {
  return {{"A", matrix_to_json(c.a)},
          {"B", matrix_to_json(c.b)},
          {"residual", c.residual},
          {"min_eig_A", c.min_eig_a},
          {"min_eig_B", c.min_eig_b},
          {"tolerance", c.tolerance},
          {"valid", c.valid()}};
}

std::string matrix_to_csv(const ComplexMatrix& m) {
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw PreconditionError("CSV export: matrix has imaginary parts above 1e-12");
  }
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j).real();
    }
    out << '\n';
  }
  return out.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mumw::io
