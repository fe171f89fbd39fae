#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mumw/error.hpp"
#include "mumw/golden.hpp"
#include "mumw/io.hpp"
#include "mumw/mum.hpp"
#include "mumw/rotations.hpp"
#include "mumw/verify.hpp"

namespace mumw::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// One line of a pass/fail table.
struct Row {
  std::string check;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  json detail = json::object();
};

json row_to_json(const Row& r) {
  json j = {{"check", r.check}, {"value", r.value}, {"threshold", r.threshold}, {"pass", r.pass}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string rows_to_csv(const std::vector<Row>& rows) {
  std::string out = "check,value,threshold,pass\n";
  for (const Row& r : rows) {
    std::string name = r.check;
    std::replace(name.begin(), name.end(), ',', ';');
    out += name + "," + format_number(r.value) + "," + format_number(r.threshold) + "," + (r.pass ? "1" : "0") + "\n";
  }
  return out;
}

CommandResult finish(json doc, const std::vector<Row>& rows) {
  json table = json::array();
  bool pass = true;
  for (const Row& r : rows) {
    table.push_back(row_to_json(r));
    pass = pass && r.pass;
  }
  doc["checks"] = std::move(table);
  doc["pass"] = pass;
  return {std::move(doc), rows_to_csv(rows), pass ? kExitPass : kExitVerificationFailure};
}

Row at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}

json config_to_json(const RunConfig& c) {
  json j = {{"command", c.command}, {"seed", c.seed}};
  if (c.command == "basis" || c.command == "mums" || c.command == "witness" || c.command == "explore") {
    j["dim"] = c.dim;
    j["basis"] = c.basis_file.empty() ? c.basis : "file";
    if (!c.alpha_order.empty()) j["alpha_order"] = c.alpha_order;
  }
  if (c.command == "mums" || c.command == "witness") {
    j["kappa"] = c.kappa;
    j["enforce_positivity"] = c.enforce_positivity;
  }
  if (c.tol) j["tol"] = *c.tol;
  return j;
}

HermitianBasis generate_basis(const std::string& label, int d) {
  if (label == "gellmann") return gellmann_basis(d);
  if (label == "appendix-b") return appendix_b_basis(d);
  if (label == "mub") return mub_derived_basis(d);
  throw UsageError("--basis must be gellmann, appendix-b or mub (or use --basis-file), got '" + label + "'");
}

HermitianBasis basis_for_recipe(const golden::Recipe& recipe) {
  HermitianBasis b = recipe.basis == BasisLabel::MubDerived ? mub_derived_basis(3) : gellmann_basis(3);
  return b.reordered(recipe.order);
}

double resolve_kappa(const std::string& text, const HermitianBasis& basis) {
  auto k = parse_kappa(text);
  return k ? *k : kappa_opt(basis);
}

bool is_detected(Verdict v) { return v == Verdict::DetectedPptEntangled || v == Verdict::DetectedNpt; }

BipartiteOperator load_operator(const json& j, bool require_hermitian) {
  ComplexMatrix m;
  int d = 0;
  if (j.contains("matrix")) {
    m = io::matrix_from_json(j.at("matrix"));
    d = j.contains("dim") ? j.at("dim").get<int>() : exact_sqrt(m.rows());
  } else if (j.contains("rows")) {
    m = io::matrix_from_json(j);
    d = exact_sqrt(m.rows());
  } else {
    throw PreconditionError("operator file must hold an operator ({\"matrix\": ...}) or a matrix ({\"rows\": ...})");
  }
  if (d < 1 || m.rows() != static_cast<Eigen::Index>(d) * d) {
    throw DimensionError("operator file: matrix size is not d^2 x d^2");
  }
  if (require_hermitian) return BipartiteOperator::hermitian(std::move(m), d, kDefaultTol * std::max(1.0, max_abs(m)));
  return BipartiteOperator(std::move(m), d);
}

ComplexMatrix load_matrix(const std::string& path) {
  return load_operator(io::read_json_file(path), false).matrix();
}

json provenance_for(const RunConfig& c, const WitnessSpec& spec) {
  json rotations = json::array();
  for (const auto& r : spec.rotations) rotations.push_back(r.descriptor());
  json p = {{"dim", spec.dim()},
            {"basis", std::string(to_string(spec.basis.label()))},
            {"alpha_order", c.alpha_order},
            {"N", spec.N},
            {"L", spec.L},
            {"kappa", spec.kappa},
            {"kappa_requested", c.kappa},
            {"rotations", rotations},
            {"enforce_positivity", spec.enforce_positivity},
            {"version", kVersion}};
  if (!c.basis_file.empty()) {
    // the loaded basis before regrouping, so the provenance can rebuild it
    RunConfig plain = c;
    plain.alpha_order.clear();
    p["basis_data"] = io::basis_to_json(load_basis(plain));
  }
  return p;
}

}  // namespace

HermitianBasis load_basis(const RunConfig& c) {
  HermitianBasis basis = c.basis_file.empty() ? generate_basis(c.basis, c.dim)
                                              : io::basis_from_json(io::read_json_file(c.basis_file));
  if (!c.alpha_order.empty()) basis = basis.reordered(c.alpha_order);
  return basis;
}

WitnessSpec build_spec(const RunConfig& c, const HermitianBasis& basis) {
  const int d = basis.dim();
  const int n = c.n_measurements.value_or(d + 1);
  const int l = c.n_negative.value_or(n);
  WitnessSpec spec = make_spec(basis, std::max(n, 0), std::clamp(l, 0, std::max(n, 0)), resolve_kappa(c.kappa, basis),
                               c.enforce_positivity);
  spec.N = n;
  spec.L = l;
  if (!c.rotations.empty()) {
    if (static_cast<int>(c.rotations.size()) != n) {
      throw PreconditionError("--rot lists " + std::to_string(c.rotations.size()) +
                              " rotations but N = " + std::to_string(n));
    }
    spec.rotations.clear();
    for (const auto& text : c.rotations) spec.rotations.push_back(parse_rotation(text, d));
  }
  spec.validate();
  return spec;
}

WitnessSpec spec_from_provenance(const json& p) {
  const int d = p.at("dim").get<int>();
  HermitianBasis basis = p.contains("basis_data") ? io::basis_from_json(p.at("basis_data"))
                                                  : generate_basis(p.at("basis").get<std::string>(), d);
  const auto order = p.value("alpha_order", std::vector<int>{});
  if (!order.empty()) basis = basis.reordered(order);
  WitnessSpec spec = make_spec(basis, p.at("N").get<int>(), p.at("L").get<int>(), p.at("kappa").get<double>(),
                               p.value("enforce_positivity", true));
  spec.rotations.clear();
  for (const auto& text : p.at("rotations")) spec.rotations.push_back(parse_rotation(text.get<std::string>(), d));
  spec.validate();
  return spec;
}

CommandResult cmd_basis(const RunConfig& c) {
  const HermitianBasis basis = load_basis(c);
  const double tol = c.tol.value_or(kDefaultTol);
  const OrthonormalityReport report = verify_orthonormal(basis, tol);
  json doc = {{"command", "basis"},
              {"config", config_to_json(c)},
              {"basis", io::basis_to_json(basis)},
              {"report",
               {{"max_gram_deviation", report.max_gram_deviation},
                {"worst_entry", {report.worst_row, report.worst_col}},
                {"max_abs_trace", report.max_abs_trace},
                {"max_hermiticity_residual", report.max_hermiticity_residual},
                {"tolerance", report.tolerance}}}};
  return finish(std::move(doc), {at_most("gram deviation", report.max_gram_deviation, tol),
                                 at_most("trace of traceless elements", report.max_abs_trace, tol),
                                 at_most("hermiticity residual", report.max_hermiticity_residual, tol)});
}

CommandResult cmd_mums(const RunConfig& c) {
  const HermitianBasis basis = load_basis(c);
  const int d = basis.dim();
  const double kappa = resolve_kappa(c.kappa, basis);
  const int n = c.n_measurements.value_or(d + 1);
  const MumFamily family = build_mums(basis, kappa, n, c.enforce_positivity);
  const MumReport report = verify_mum(family, c.enforce_positivity);
  const double tol = c.tol.value_or(1e-8);
  json doc = {{"command", "mums"},
              {"config", config_to_json(c)},
              {"kappa_opt", kappa_opt(basis)},
              {"mums", io::mums_to_json(family)}};
  std::vector<Row> rows = {at_most("trace deviation", report.max_trace_deviation, tol),
                           at_most("completeness deviation", report.max_completeness_deviation, tol),
                           at_most("gram deviation", report.max_gram_deviation, tol)};
  if (report.positivity_checked) rows.push_back({"min eigenvalue", report.min_eigenvalue, -tol, report.min_eigenvalue >= -tol});
  return finish(std::move(doc), rows);
}

CommandResult cmd_witness(const RunConfig& c) {
  const HermitianBasis basis = load_basis(c);
  const WitnessSpec spec = build_spec(c, basis);
  const BipartiteOperator w = witness_W(spec);
  const BipartiteOperator wt = witness_Wtilde(spec);
  json doc = {{"command", "witness"},
              {"provenance", provenance_for(c, spec)},
              {"kappa_opt", kappa_opt(basis)},
              {"ccnr_scale", ccnr_scale(spec.dim())},
              {"min_eigenvalue_Wtilde", min_eigenvalue(wt.matrix(), 1e-8)},
              {"W", io::operator_to_json(w)},
              {"Wtilde", io::operator_to_json(wt)}};
  CommandResult result{std::move(doc), "", kExitPass};
  if (c.format == OutputFormat::Csv) result.csv = io::matrix_to_csv(c.which == "W" ? w.matrix() : wt.matrix());
  return result;
}

CommandResult cmd_verify(const RunConfig& c) {
  if (c.witness_file.empty()) throw UsageError("verify needs --witness");
  if (c.which != "W" && c.which != "Wtilde") throw UsageError("--which must be W or Wtilde");
  const json wf = io::read_json_file(c.witness_file);
  const bool from_witness_command = wf.contains("Wtilde");
  const BipartiteOperator w = load_operator(from_witness_command ? wf.at(c.which) : wf, true);

  std::vector<std::string> checks = c.checks;
  if (checks.empty()) {
    checks.push_back("block-positivity");
    if (!c.state_file.empty()) checks.push_back("detection");
    if (!c.a_file.empty() || !c.b_file.empty()) checks.push_back("decomposition");
  }

  std::optional<BipartiteOperator> rho;
  auto state = [&]() -> const BipartiteOperator& {
    if (c.state_file.empty()) throw UsageError("this check needs --state");
    if (!rho) rho = load_operator(io::read_json_file(c.state_file), false);
    return *rho;
  };

  json details = json::object();
  std::vector<Row> rows;
  for (const std::string& check : checks) {
    if (check == "block-positivity") {
      const double tol = c.tol.value_or(1e-8);
      SeesawOptions opt;
      opt.restarts = c.restarts;
      opt.seed = c.seed;
      const ProductMinimum m = block_positivity_min(w, opt);
      rows.push_back({check, m.value, -tol, m.value >= -tol, {{"restarts", opt.restarts}}});
    } else if (check == "ppt") {
      const double tol = c.tol.value_or(kStateTol);
      const DetectionResult r = detect(w, state(), tol);
      const ComplexMatrix pt = partial_transpose(state().matrix(), state().dim());
      const double value = hermiticity_residual(pt) <= tol ? min_eigenvalue(pt, tol)
                                                           : std::numeric_limits<double>::quiet_NaN();
      rows.push_back({check, value, -tol, r.ppt, io::detection_to_json(r)});
    } else if (check == "detection") {
      const double tol = c.tol.value_or(kStateTol);
      const DetectionResult r = detect(w, state(), tol);
      json detail = io::detection_to_json(r);
      detail["verdict"] = std::string(to_string(r.verdict));
      rows.push_back({check, r.expectation, -tol, is_detected(r.verdict), detail});
      details["verdict"] = std::string(to_string(r.verdict));
    } else if (check == "decomposition") {
      if (c.a_file.empty() || c.b_file.empty()) throw UsageError("the decomposition check needs --A and --B");
      const double tol = c.tol.value_or(kStateTol);
      const DecompositionCertificate cert = verify_decomposition(w, load_matrix(c.a_file), load_matrix(c.b_file), tol);
      json detail = {{"min_eig_a", cert.min_eig_a}, {"min_eig_b", cert.min_eig_b}};
      rows.push_back({check, cert.residual, tol, cert.valid(), detail});
    } else if (check == "positivity") {
      if (!wf.contains("provenance")) throw UsageError("the positivity check needs a witness file written by 'witness'");
      const CheckReport r = check_positivity_condition(spec_from_provenance(wf.at("provenance")), c.samples, c.seed);
      rows.push_back({check, r.worst_value, r.threshold, r.pass, r.config});
    } else {
      throw UsageError("unknown check '" + check + "' (block-positivity, ppt, detection, decomposition, positivity)");
    }
  }
  json doc = {{"command", "verify"}, {"config", config_to_json(c)}, {"which", c.which}};
  doc["config"]["checks"] = checks;
  if (!details.empty()) doc["summary"] = details;
  return finish(std::move(doc), rows);
}

namespace {

std::vector<Row> reproduce_reduction(double tol) {
  std::vector<Row> rows;
  for (int d : {2, 3, 4, 5}) {
    const ComplexMatrix target = identity(d * d) - static_cast<double>(d) * max_entangled_projector(d);
    std::vector<std::string> labels = {"gellmann", "appendix-b"};
    if (is_prime(d)) labels.insert(labels.begin(), "mub");
    for (const auto& label : labels) {
      const HermitianBasis b = generate_basis(label, d);
      const WitnessSpec spec = make_spec(b, d + 1, d + 1, kappa_opt(b));
      const ComplexMatrix wt = witness_Wtilde(spec).matrix() / ccnr_scale(d);
      rows.push_back(at_most("reduction witness d=" + std::to_string(d) + " " + label, max_abs_diff(wt, target), tol));
    }
  }
  return rows;
}

std::vector<Row> reproduce_cyclic(double tol) {
  std::vector<Row> rows;
  const HermitianBasis b = gellmann_basis(3);
  for (int r : {1, 2}) {
    const golden::Fixture g = r == 1 ? golden::cyclic_witness_w1() : golden::cyclic_witness_w2();
    WitnessSpec spec = make_spec(b, 4, 4, kappa_opt(b));
    spec.rotations[3] = permutation_rotation(3, r);
    const ComplexMatrix wt = witness_Wtilde(spec).matrix() / g.prefactor;
    rows.push_back(at_most(g.name + " entrywise", max_abs_diff(wt, g.entries), tol));
  }
  return rows;
}

std::vector<Row> reproduce_shift(double tol) {
  std::vector<Row> rows;
  for (int d : {3, 4, 5}) {
    const HermitianBasis b = appendix_b_basis(d);
    for (int r = 1; r < d; ++r) {
      WitnessSpec spec = make_spec(b, d + 1, d + 1, kappa_opt(b));
      spec.rotations[d] = permutation_rotation(d, r);
      const double dev = max_abs_diff(witness_Wtilde(spec).matrix(), shift_witness(d, r).matrix()) / ccnr_scale(d);
      rows.push_back(at_most("shift witness d=" + std::to_string(d) + " r=" + std::to_string(r), dev, tol));
    }
  }
  return rows;
}

std::vector<Row> state_rows(const golden::Fixture& f, double tol) {
  const ComplexMatrix rho = f.full();
  const double min_eig = min_eigenvalue(rho, tol);
  const double min_eig_pt = min_eigenvalue(partial_transpose(rho, 3), tol);
  const double trace_dev = std::abs(rho.trace().real() - 1.0);
  return {{f.name + " psd", min_eig, -tol, min_eig >= -tol},
          at_most(f.name + " unit trace", trace_dev, tol),
          {f.name + " ppt", min_eig_pt, -tol, min_eig_pt >= -tol}};
}

struct BoundEntanglementReport {
  std::vector<Row> rows;
  json supplementary = json::object();
};

BoundEntanglementReport reproduce_bound_entanglement(double tol, std::uint64_t seed) {
  BoundEntanglementReport out;
  auto build = [](const golden::Recipe& recipe) {
    const HermitianBasis b = basis_for_recipe(recipe);
    return witness_Wtilde(make_spec(b, 4, recipe.L, kappa_opt(b)));
  };
  const BipartiteOperator w1 = build(golden::recipe_mub_w1());
  const BipartiteOperator w2 = build(golden::recipe_mub_w2());
  const BipartiteOperator w3 = build(golden::recipe_gellmann_w3());
  const BipartiteOperator w4 = build(golden::recipe_gellmann_w4());

  const std::pair<const BipartiteOperator*, golden::Fixture> printed[] = {
      {&w1, golden::mub_witness_w1()},
      {&w2, golden::mub_witness_w2()},
      {&w3, golden::gellmann_witness_w3()},
      {&w4, golden::gellmann_witness_w4()}};
  for (const auto& [w, g] : printed) {
    out.rows.push_back(at_most(g.name + " entrywise", max_abs_diff(w->matrix() / g.prefactor, g.entries), tol));
  }

  const golden::Fixture rho1 = golden::ppt_state_rho1();
  const golden::Fixture rho2 = golden::ppt_state_rho2();
  for (const auto& f : {rho1, rho2}) {
    auto rows = state_rows(f, tol);
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }

  constexpr double kDetectionMargin = 1e-6;
  const std::tuple<const BipartiteOperator*, golden::Fixture, double, std::string> pairs[] = {
      {&w1, rho1, golden::kExpectationW1Rho1, "Tr(W~1 rho1)"},
      {&w2, rho2, golden::kExpectationW2Rho2, "Tr(W~2 rho2)"}};
  for (const auto& [w, f, frozen, name] : pairs) {
    const DetectionResult r = detect(*w, BipartiteOperator::hermitian(f.full(), 3, tol), tol);
    json detail = io::detection_to_json(r);
    detail["verdict"] = std::string(to_string(r.verdict));
    out.rows.push_back({name + " < 0", r.expectation, -kDetectionMargin,
                        r.expectation < -kDetectionMargin && r.verdict == Verdict::DetectedPptEntangled, detail});
    out.rows.push_back(at_most(name + " regression", std::abs(r.expectation - frozen), tol));
  }

  auto certificate_row = [&](const std::string& name, const BipartiteOperator& w, const golden::Fixture& a,
                             const golden::Fixture& b) {
    const DecompositionCertificate cert = verify_decomposition(w, a.full(), b.full(), tol);
    return Row{name, cert.residual, tol, cert.valid(), {{"min_eig_a", cert.min_eig_a}, {"min_eig_b", cert.min_eig_b}}};
  };
  out.rows.push_back(
      certificate_row("W~3 = A3 + B3^T2", w3, golden::decomposition_a3(), golden::decomposition_b3()));
  out.rows.push_back(
      certificate_row("W~4 = A4 + B4^T2", w4, golden::decomposition_a4(), golden::decomposition_b4()));

  const Row corrected = certificate_row("W~4 = A4' + B4'^T2", w4, golden::corrected_decomposition_a4(),
                                        golden::corrected_decomposition_b4());
  out.supplementary["corrected_A4_B4"] = row_to_json(corrected);
  out.supplementary["corrected_A4_B4"]["A"] = io::matrix_to_json(golden::corrected_decomposition_a4().entries);
  out.supplementary["corrected_A4_B4"]["B"] = io::matrix_to_json(golden::corrected_decomposition_b4().entries);
  out.supplementary["corrected_A4_B4"]["prefactor"] = golden::corrected_decomposition_a4().prefactor_text;

  SeesawOptions opt;
  opt.seed = seed;
  json seesaw = json::object();
  for (const auto& [w, g] : printed) seesaw[g.name] = block_positivity_min(*w, opt).value;
  out.supplementary["seesaw_minimum"] = seesaw;
  return out;
}

std::vector<Row> reproduce_appendix_b(double tol) {
  std::vector<Row> rows;
  for (int d = 2; d <= 6; ++d) {
    const HermitianBasis b = appendix_b_basis(d);
    const std::string tag = " d=" + std::to_string(d);
    rows.push_back(at_most("orthonormality" + tag, verify_orthonormal(b, tol).max_gram_deviation, tol));
    const double expected = (d + 2.0) / (static_cast<double>(d) * d);
    rows.push_back(at_most("kappa_opt = (d+2)/d^2" + tag, std::abs(kappa_opt(b) - expected), tol));
    const FOperators f = build_F(b);
    const double s = std::sqrt(static_cast<double>(d)) + 1.0;
    for (int r = 1; r < d; ++r) {
      ComplexMatrix target = -identity(d * d);
      for (int k = 0; k < d; ++k) {
        const int shifted = ((k - r) % d + d) % d;
        target += static_cast<double>(d) * kron(matrix_unit(d, shifted, shifted), matrix_unit(d, k, k));
      }
      target *= s * s;
      const ComplexMatrix j = j_operator(f, d + 1, permutation_rotation(d, r));
      rows.push_back(at_most("diagonal-group J with shift r=" + std::to_string(r) + tag,
                             max_abs_diff(j, target) / (s * s), tol));
    }
  }
  return rows;
}

}  // namespace

CommandResult cmd_reproduce(const RunConfig& c) {
  const double tol = c.tol.value_or(1e-9);
  json doc = {{"command", "reproduce"}, {"example", c.example}, {"config", config_to_json(c)}, {"tolerance", tol}};
  if (c.example == "1") return finish(std::move(doc), reproduce_reduction(tol));
  if (c.example == "2") return finish(std::move(doc), reproduce_cyclic(tol));
  if (c.example == "3") return finish(std::move(doc), reproduce_shift(tol));
  if (c.example == "appendixB") return finish(std::move(doc), reproduce_appendix_b(tol));
  if (c.example == "4") {
    BoundEntanglementReport ex = reproduce_bound_entanglement(tol, c.seed);
    doc["supplementary"] = std::move(ex.supplementary);
    return finish(std::move(doc), ex.rows);
  }
  throw UsageError("reproduce expects one of 1, 2, 3, 4, appendixB; got '" + c.example + "'");
}

CommandResult cmd_explore(const RunConfig& c) {
  const int d = c.dim;
  const int n = d + 1;
  const HermitianBasis base = load_basis(c);

  std::optional<BipartiteOperator> rho1, rho2;
  if (d == 3) {
    rho1 = BipartiteOperator::hermitian(golden::ppt_state_rho1().full(), 3);
    rho2 = BipartiteOperator::hermitian(golden::ppt_state_rho2().full(), 3);
  }
  SeesawOptions opt;
  opt.seed = c.seed;
  opt.restarts = c.restarts;

  json entries = json::array();
  std::vector<ComplexMatrix> seen;
  int undetermined = 0, decomposable = 0, not_witness = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    // negative groups first, then the positive ones
    std::vector<int> order;
    for (int a = 1; a <= n; ++a)
      if (mask & (1 << (a - 1))) order.push_back(a);
    const int l = static_cast<int>(order.size());
    for (int a = 1; a <= n; ++a)
      if (!(mask & (1 << (a - 1)))) order.push_back(a);
    const HermitianBasis b = base.reordered(order);
    const BipartiteOperator wt = witness_Wtilde(make_spec(b, n, l, kappa_opt(b)));
    const bool duplicate = std::any_of(seen.begin(), seen.end(),
                                       [&](const ComplexMatrix& m) { return max_abs_diff(m, wt.matrix()) <= 1e-9; });
    if (duplicate) continue;
    seen.push_back(wt.matrix());

    const double lambda_min = min_eigenvalue(wt.matrix(), 1e-8);
    const double product_min = block_positivity_min(wt, opt).value;
    std::string status;
    if (lambda_min >= -1e-9) {
      status = "positive-semidefinite";
      ++not_witness;
    } else if (search_decomposition(wt)) {
      status = "decomposable";
      ++decomposable;
    } else {
      status = "no-decomposition-found";
      ++undetermined;
    }
    json negative = json::array();
    for (int i = 0; i < l; ++i) negative.push_back(order[i]);
    json e = {{"negative_groups", negative},
              {"L", l},
              {"min_eigenvalue", lambda_min},
              {"seesaw_minimum", product_min},
              {"status", status}};
    if (rho1) {
      e["tr_rho1"] = trace_product(wt.matrix(), rho1->matrix()).real();
      e["tr_rho2"] = trace_product(wt.matrix(), rho2->matrix()).real();
    }
    entries.push_back(std::move(e));
  }
  json doc = {{"command", "explore"},
              {"config", config_to_json(c)},
              {"distinct_witnesses", entries.size()},
              {"positive_semidefinite", not_witness},
              {"decomposable", decomposable},
              {"no_decomposition_found", undetermined},
              {"entries", std::move(entries)}};
  std::string csv = "negative_groups,L,min_eigenvalue,seesaw_minimum,status\n";
  for (const auto& e : doc["entries"]) {
    std::string groups;
    for (const auto& g : e["negative_groups"]) groups += (groups.empty() ? "" : ";") + std::to_string(g.get<int>());
    csv += groups + "," + std::to_string(e["L"].get<int>()) + "," + format_number(e["min_eigenvalue"].get<double>()) +
           "," + format_number(e["seesaw_minimum"].get<double>()) + "," + e["status"].get<std::string>() + "\n";
  }
  return {std::move(doc), std::move(csv), kExitPass};
}

CommandResult dispatch(const RunConfig& c) {
  if (c.command == "basis") return cmd_basis(c);
  if (c.command == "mums") return cmd_mums(c);
  if (c.command == "witness") return cmd_witness(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "reproduce") return cmd_reproduce(c);
  if (c.command == "explore") return cmd_explore(c);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace mumw::cli
