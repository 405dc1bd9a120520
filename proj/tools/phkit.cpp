#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phkit/classifier.hpp"
#include "phkit/ensemble_solver.hpp"
#include "phkit/errors.hpp"
#include "phkit/inverse_solver.hpp"
#include "phkit/json_io.hpp"
#include "phkit/quadric_forms.hpp"
#include "phkit/surface_export.hpp"

using namespace phkit;

namespace {

struct RunConfig {
  Tolerance tol;
  std::string out;
  bool verify = false;
};

// Residual bound used by --verify, relative to the sizes of the matrices involved.
constexpr double kVerifyRtol = 1e-10;

struct VerifyFailure {
  std::string what;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(cfg.out, text.back() == '\n' ? text : text + '\n');
  }
}

Json classification_json(const PauliForm& p, const Tolerance& tol) {
  const PTCell c = classify(p, tol);
  const EigenPair e = eigenvalues(p);
  return Json{{"cell", std::string(to_string(c.cell))},
              {"symmetry", std::string(to_string(c.symmetry))},
              {"spectrum", std::string(to_string(c.spectrum))},
              {"diagonalizable", c.diagonalizable},
              {"eigenvalues", Json::array({to_json(e.e1), to_json(e.e2)})}};
}

Json vec6_json(const Vec6& v) {
  Json out = Json::array();
  for (int i = 0; i < 6; ++i) out.push_back(v[i]);
  return out;
}

double verify_bound(const PauliForm& h, const HermitianMetric& g) {
  return kVerifyRtol * std::max(1.0, compose(h).norm() * g.matrix().norm());
}

Json run_classify(const std::string& matrix_path, const std::string& g_path, const RunConfig& cfg) {
  const PauliForm p = pauli_from_json(read_json_file(matrix_path));
  Json out = classification_json(p, cfg.tol);
  out["pauli"] = to_json(p);
  out["normal"] = is_normal(p, cfg.tol);
  if (!g_path.empty()) {
    const HermitianMetric g = metric_from_json(read_json_file(g_path), cfg.tol);
    const PredicateReport r = check_g_propositions(p, g, cfg.tol);
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back(Json{{"name", c.name}, {"holds", c.holds}, {"residual", c.residual}});
    out["pair_residual"] = r.pair_residual;
    out["propositions"] = checks;
    if (cfg.verify && !r.all_hold()) throw VerifyFailure{"a predicate does not hold"};
  }
  return out;
}

Json run_ensemble(const std::string& g_path, bool pt_only, bool numeric,
                  const std::optional<std::vector<double>>& params, const RunConfig& cfg) {
  const HermitianMetric g = metric_from_json(read_json_file(g_path), cfg.tol);
  EnsembleOptions opt;
  opt.pt_only = pt_only;
  opt.force_numeric = numeric;
  const EnsembleBasis eb = solve_ensemble(g, opt, cfg.tol);

  Json out{{"metric", to_json(g)},
           {"regime", std::string(to_string(eb.regime))},
           {"source", std::string(to_string(eb.source))},
           {"pt_restricted", eb.pt_restricted},
           {"trace_param", eb.trace_param},
           {"free_params", eb.free_params},
           {"param_components", eb.param_components}};
  Json basis = Json::array(), mats = Json::array();
  for (const Vec6& v : eb.basis) basis.push_back(vec6_json(v));
  for (const PauliForm& m : eb.basis_matrices) mats.push_back(to_json(m));
  out["basis"] = basis;
  out["basis_matrices"] = mats;
  if (eb.singular_pt_constraint) {
    const PTConstraint& c = *eb.singular_pt_constraint;
    out["pt_constraint"] = Json{{"weights", c.weights}, {"solved_for", eb.free_params[c.target]}};
  }

  const double basis_worst = basis_residual(eb);
  double bound = 0.0;
  for (const PauliForm& m : eb.basis_matrices) bound = std::max(bound, verify_bound(m, g));
  bool pass = basis_worst <= bound;
  if (params) {
    const PauliForm h = generate_H(eb, *params);
    const double r = pseudo_hermiticity_residual(h, g);
    Json member = classification_json(h, cfg.tol);
    member["params"] = *params;
    member["pauli"] = to_json(h);
    member["residual"] = r;
    out["member"] = member;
    pass = pass && r <= verify_bound(h, g);
  }
  if (cfg.verify) {
    out["verify"] = Json{{"basis_residual", basis_worst}, {"pass", pass}};
    if (!pass) throw VerifyFailure{"||H^+ G - G H|| above bound"};
  }
  return out;
}

Json run_common(const std::string& g1_path, const std::string& g2_path, const RunConfig& cfg) {
  const HermitianMetric g = metric_from_json(read_json_file(g1_path), cfg.tol);
  const HermitianMetric f = metric_from_json(read_json_file(g2_path), cfg.tol);
  const PauliForm h = common_pseudo_H(g, f, cfg.tol);
  const double r1 = pseudo_hermiticity_residual(h, g);
  const double r2 = pseudo_hermiticity_residual(h, f);
  Json out = classification_json(h, cfg.tol);
  out["pauli"] = to_json(h);
  out["residual_g1"] = r1;
  out["residual_g2"] = r2;
  if (cfg.verify) {
    const bool pass = r1 <= verify_bound(h, g) && r2 <= verify_bound(h, f);
    out["verify"] = Json{{"pass", pass}};
    if (!pass) throw VerifyFailure{"common H fails a metric"};
  }
  return out;
}

Json run_quadric(const std::string& g_path, double level, std::size_t samples, std::uint64_t seed,
                 const RunConfig& cfg) {
  const HermitianMetric g = metric_from_json(read_json_file(g_path), cfg.tol);
  EnsembleOptions opt;
  opt.pt_only = true;
  const DetForm f = det_form(solve_ensemble(g, opt, cfg.tol));
  const QuadricClass cls = classify_level_set(f, level, cfg.tol);

  Json out{{"A", to_json(f.A)},
           {"param_names", f.param_names},
           {"eigenvalues", to_json(f.eigenvalues)},
           {"level", level},
           {"class", std::string(to_string(cls))},
           {"source_cell", std::string(to_string(f.source_cell))},
           {"regime", std::string(to_string(f.regime))},
           {"seed", seed}};
  if (cls == QuadricClass::Empty || samples == 0) {
    out["symmetry_fraction"] = nullptr;
    return out;
  }
  const SymmetryStats st = symmetry_report(f, level, samples, seed, cfg.tol);
  out["symmetry_fraction"] = st.fraction();
  out["symmetry"] = Json{{"predicted", std::string(to_string(st.predicted))},
                         {"samples", st.samples},
                         {"broken", st.broken},
                         {"unbroken", st.unbroken},
                         {"degenerate", st.degenerate},
                         {"max_level_residual", st.max_level_residual}};
  if (cfg.verify && st.matched != st.samples) throw VerifyFailure{"sampled symmetry differs from prediction"};
  return out;
}

Json run_inverse(const std::string& h_path, double d, const RunConfig& cfg) {
  const PauliForm p = pauli_from_json(read_json_file(h_path));
  const GSolutionSet sol = solve_metrics(p, d, cfg.tol);
  const auto quadrics = build_six_quadrics(p, d, cfg.tol);

  Json out{{"feasible", sol.feasible}, {"solution_dimension", sol.dimension}, {"d", d}};
  if (!sol.feasible) {
    std::cerr << "no Hermitian metric with half-trace " << d
              << " satisfies H^+ G = G H (solution dimension 0)\n";
    out["particular"] = nullptr;
  } else {
    out["particular"] = to_json(sol.particular);
  }
  Json basis = Json::array();
  for (const Vec3& u : sol.directions) basis.push_back(to_json(u));
  out["basis"] = basis;
  Json singular = Json::array();
  for (std::size_t i = 0; i < sol.singular_params.size(); ++i)
    singular.push_back(Json{{"t", sol.singular_params[i]}, {"gR", to_json(sol.singular_metrics[i].gR)}});
  out["singular_points"] = singular;
  Json qs = Json::array();
  for (const QuadraticSurface& s : quadrics) {
    Json q = to_json(s);
    q["class"] = std::string(to_string(classify_quadric(s, cfg.tol).cls));
    qs.push_back(q);
  }
  out["quadrics"] = qs;

  if (cfg.verify && sol.feasible) {
    double worst_pair = 0.0, worst_surface = 0.0, bound = 0.0;
    std::vector<std::vector<double>> probes{std::vector<double>(sol.directions.size(), 0.0)};
    for (std::size_t k = 0; k < sol.directions.size(); ++k) {
      probes.emplace_back(sol.directions.size(), 0.0);
      probes.back()[k] = 1.0;
    }
    for (const auto& t : probes) {
      const HermitianMetric g = sol.member(t, cfg.tol);
      worst_pair = std::max(worst_pair, pseudo_hermiticity_residual(p.traceless(), g));
      worst_surface = std::max(worst_surface, surface_residuals(p, d, g).cwiseAbs().maxCoeff());
      bound = std::max(bound, verify_bound(p, g));
    }
    const bool pass = worst_pair <= bound && worst_surface <= bound;
    out["verify"] = Json{{"pair_residual", worst_pair}, {"surface_residual", worst_surface}, {"pass", pass}};
    if (!pass) throw VerifyFailure{"solution fails the pseudo-Hermiticity or surface check"};
  }
  return out;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "--grid expects min,max,res");
    }
  }
  if (parts.size() != 3 || parts[2] != static_cast<int>(parts[2]))
    throw Error(ErrorKind::InvalidInput, "--grid expects min,max,res");
  GridSpec grid;
  grid.min = Vec3::Constant(parts[0]);
  grid.max = Vec3::Constant(parts[1]);
  const int res = static_cast<int>(parts[2]);
  grid.resolution = {res, res, res};
  return grid;
}

ScalarField sample_surface_file(const Json& j, int index, double level, const GridSpec& grid) {
  if (j.contains("quadrics")) {
    const Json& qs = j["quadrics"];
    if (index < 1 || static_cast<std::size_t>(index) > qs.size())
      throw Error(ErrorKind::InvalidInput, "--index must pick one of the quadrics (1.." +
                                               std::to_string(qs.size()) + ")");
    return sample_surface_file(qs[static_cast<std::size_t>(index - 1)], 0, level, grid);
  }
  if (!j.contains("A")) throw Error(ErrorKind::InvalidInput, "surface file needs \"A\" or \"quadrics\"");
  if (j.contains("b")) {
    QuadraticSurface s;
    s.A = mat3_from_json(j["A"]);
    s.b = vec3_from_json(j["b"]);
    s.c = j.value("c", 0.0);
    ScalarField field = sample_scalar_field(s, grid);
    field.level = level;
    return field;
  }
  DetForm f;
  f.A = mat3_from_json(j["A"]);
  return sample_scalar_field(f, level, grid);
}

std::string run_export(const std::string& surface_path, double level, const std::string& grid_text,
                       const std::string& format, int index, bool full_field) {
  const GridSpec grid = parse_grid(grid_text);
  const ScalarField field = sample_surface_file(read_json_file(surface_path), index, level, grid);
  std::ostringstream os;
  if (full_field) {
    if (format == "csv") {
      write_field_csv(os, field);
      return os.str();
    }
    Json rows = Json::array();
    for (std::size_t n = 0; n < field.values.size(); ++n) {
      const Vec3 p = field.point(n);
      rows.push_back(Json::array({p[0], p[1], p[2], field.values[n]}));
    }
    return dump(Json{{"level", level}, {"columns", {"x", "y", "z", "f"}}, {"rows", rows}});
  }
  const std::vector<Vec3> points = extract_isosurface_points(field, level);
  if (format == "csv") {
    write_points_csv(os, points);
    return os.str();
  }
  Json pts = Json::array();
  for (const Vec3& p : points) pts.push_back(to_json(p));
  return dump(Json{{"level", level}, {"columns", {"x", "y", "z"}}, {"points", pts}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phkit: 2x2 PT-symmetric and pseudo-Hermitian matrix toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--atol", cfg.tol.atol, "absolute zero band")->check(CLI::PositiveNumber);
  app.add_option("--rtol", cfg.tol.rtol, "relative zero band")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the result here instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "PT cell, symmetry and spectrum of a matrix");
  std::string matrix_path, g_path;
  classify_cmd->add_option("--matrix", matrix_path)->required();
  classify_cmd->add_option("--g", g_path, "metric; reports the implications that apply to (H, G)");
  classify_cmd->add_flag("--verify", cfg.verify);

  auto* ensemble_cmd = app.add_subcommand("ensemble", "all H with H^+ G = G H for a metric");
  bool pt_only = false, numeric = false;
  std::vector<double> params;
  ensemble_cmd->add_option("--g", g_path)->required();
  ensemble_cmd->add_flag("--pt-only", pt_only);
  ensemble_cmd->add_flag("--numeric", numeric, "use the SVD nullspace");
  ensemble_cmd->add_option("--params", params)->delimiter(',');
  ensemble_cmd->add_flag("--verify", cfg.verify);

  auto* common_cmd = app.add_subcommand("common", "H pseudo-Hermitian for two metrics");
  std::string g1_path, g2_path;
  common_cmd->add_option("--g1", g1_path)->required();
  common_cmd->add_option("--g2", g2_path)->required();
  common_cmd->add_flag("--verify", cfg.verify);

  auto* quadric_cmd = app.add_subcommand("quadric", "determinant form and level-set class");
  double level = 0.0;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  quadric_cmd->add_option("--g", g_path)->required();
  quadric_cmd->add_option("--level", level)->required();
  quadric_cmd->add_option("--samples", samples);
  quadric_cmd->add_option("--seed", seed);
  quadric_cmd->add_flag("--verify", cfg.verify);

  auto* inverse_cmd = app.add_subcommand("inverse", "metrics G with H^+ G = G H for a fixed half-trace");
  std::string h_path;
  double d = 0.0;
  inverse_cmd->set_help_flag("--help", "Print this help message and exit");
  inverse_cmd->add_option("--h", h_path)->required();
  inverse_cmd->add_option("--d", d)->required();
  inverse_cmd->add_flag("--verify", cfg.verify);

  auto* export_cmd = app.add_subcommand("export", "grid samples or isosurface points of a surface");
  std::string surface_path, grid_text = "-3,3,64", format = "csv";
  int index = 0;
  bool full_field = false;
  export_cmd->add_option("--surface", surface_path)->required();
  export_cmd->add_option("--level", level);
  export_cmd->add_option("--grid", grid_text, "min,max,res");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  export_cmd->add_option("--index", index, "quadric to use from an inverse result (1..6)");
  export_cmd->add_flag("--field", full_field, "emit every grid node with its value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (const char* env = std::getenv("PHKIT_TOLERANCE")) {
    char* end = nullptr;
    const double rtol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(rtol > 0.0)) {
      std::cerr << "PHKIT_TOLERANCE must be a positive number\n";
      return 1;
    }
    cfg.tol.rtol = rtol;
  }

  try {
    if (classify_cmd->parsed()) {
      emit(cfg, dump(run_classify(matrix_path, g_path, cfg)));
    } else if (ensemble_cmd->parsed()) {
      std::optional<std::vector<double>> p;
      if (ensemble_cmd->count("--params") > 0) p = params;
      emit(cfg, dump(run_ensemble(g_path, pt_only, numeric, p, cfg)));
    } else if (common_cmd->parsed()) {
      emit(cfg, dump(run_common(g1_path, g2_path, cfg)));
    } else if (quadric_cmd->parsed()) {
      emit(cfg, dump(run_quadric(g_path, level, samples, seed, cfg)));
    } else if (inverse_cmd->parsed()) {
      emit(cfg, dump(run_inverse(h_path, d, cfg)));
    } else if (export_cmd->parsed()) {
      emit(cfg, run_export(surface_path, level, grid_text, format, index, full_field));
    }
  } catch (const Error& e) {
    std::cerr << "phkit: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const VerifyFailure& e) {
    std::cerr << "phkit: verify failed: " << e.what << '\n';
    return 1;
  }
  return 0;
}
