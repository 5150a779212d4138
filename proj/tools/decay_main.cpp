// decay: evaluate, fit, and cross-check the diffusion half-life model for
// alpha decay, cluster radioactivity, and spontaneous fission.
//
// Subcommands: predict, fit, validate, invert, compare, simulate.
// Exit codes: 0 success, 1 model/data errors, 2 usage errors.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decay/builtin.hpp"
#include "decay/dataset_io.hpp"
#include "decay/fit.hpp"
#include "decay/gamow.hpp"
#include "decay/kramers.hpp"
#include "decay/langevin.hpp"
#include "decay/nuclide.hpp"
#include "decay/report.hpp"

namespace {

using namespace decay;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_dir_override(const char* filename) {
  const char* dir = std::getenv("DECAY_DATA_DIR");
  if (!dir || !*dir) return {};
  const std::string candidate = std::string(dir) + "/" + filename;
  std::ifstream probe(candidate);
  return probe ? candidate : std::string{};
}

Dataset resolve_dataset(const std::string& spec, RunManifest& manifest) {
  if (spec == "embedded") {
    if (const std::string p = data_dir_override("dataset.csv"); !p.empty()) {
      manifest.inputs.emplace_back("data", p + " (DECAY_DATA_DIR)");
      return load_dataset_file(p);
    }
    manifest.inputs.emplace_back("data", "embedded");
    return builtin_dataset();
  }
  manifest.inputs.emplace_back("data", spec);
  return load_dataset_file(spec);
}

ParameterSet resolve_params(const std::string& spec, RunManifest& manifest) {
  if (spec == "table4") {
    if (const std::string p = data_dir_override("table4.params"); !p.empty()) {
      manifest.inputs.emplace_back("params", p + " (DECAY_DATA_DIR)");
      manifest.params_hash = fnv1a(slurp(p));
      return load_parameters_file(p);
    }
    manifest.inputs.emplace_back("params", "table4 (builtin)");
    manifest.params_hash = fnv1a(builtin_parameters_text());
    return builtin_parameters();
  }
  manifest.inputs.emplace_back("params", spec);
  manifest.params_hash = fnv1a(slurp(spec));
  return load_parameters_file(spec);
}

RadiusVariant resolve_variant(const std::string& name) {
  if (name == "a-minus-acl") return RadiusVariant::DaughterMass;
  if (name == "as-printed") return RadiusVariant::ParentMinusZcl;
  throw DomainError("unknown --variant '" + name + "' (a-minus-acl|as-printed)");
}

std::string fd(double v) { return format_double(v); }

// ---------------------------------------------------------------------------

int cmd_predict(const std::string& data, const std::string& params_spec,
                const std::string& out_path, const std::string& variant_name) {
  RunManifest manifest;
  manifest.command = "predict";
  manifest.timestamp = now_utc();
  const Dataset ds = resolve_dataset(data, manifest);
  const ParameterSet params = resolve_params(params_spec, manifest);
  const RadiusVariant variant = resolve_variant(variant_name);
  const PhysicalConstants constants;

  std::ostringstream main_csv;
  main_csv << manifest.header_lines();
  main_csv << "row,element,A,Z,A_cl,Z_cl,decay_class,role,E_TKE_MeV,lg_T_exp_yr,"
              "lg_T_model_yr,delta_lg\n";
  std::map<DecayClass, std::ostringstream> plots;
  for (auto c : {DecayClass::Alpha, DecayClass::Cluster, DecayClass::SpontaneousFission}) {
    plots[c] << manifest.header_lines() << "E_TKE_MeV,lg_T_model_yr\n";
  }
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const auto& r = ds.records[i];
    const KramersBreakdown b = log_half_life(r, params, constants, variant);
    const double lg_exp = std::log10(r.t_half_exp);
    main_csv << (i + 1) << ',' << r.element << ',' << r.a << ',' << r.z << ',' << r.a_cl << ','
             << r.z_cl << ',' << to_string(r.decay_class) << ',' << to_string(r.role) << ','
             << fd(r.e_tke) << ',' << fd(lg_exp) << ',' << fd(b.lg_t_half) << ','
             << fd(b.lg_t_half - lg_exp) << '\n';
    plots[r.decay_class] << fd(r.e_tke) << ',' << fd(b.lg_t_half) << '\n';
  }
  atomic_write(out_path, main_csv.str());
  for (auto& [cls, stream] : plots) {
    atomic_write(out_path + "." + to_string(cls) + ".csv", stream.str());
  }
  std::cout << "predict: wrote " << ds.records.size() << " rows to " << out_path << '\n';
  return 0;
}

int cmd_fit(const std::string& data, const std::string& init_spec, const std::string& out_path,
            const std::string& weighting_name, double reg, int max_iter,
            const std::string& variant_name) {
  RunManifest manifest;
  manifest.command = "fit";
  manifest.timestamp = now_utc();
  const Dataset ds = resolve_dataset(data, manifest);
  ParameterSet init;
  if (init_spec == "zero") {
    manifest.inputs.emplace_back("init", "zero");
    std::ostringstream zeros;
    serialize_parameters(zeros, init);
    manifest.params_hash = fnv1a(zeros.str());
  } else {
    init = resolve_params(init_spec, manifest);
  }

  FitConfig config;
  if (weighting_name == "unit") {
    config.weighting = Weighting::unit();
  } else if (weighting_name == "sigma") {
    config.weighting = Weighting::experimental_sigma();
  } else {
    throw DomainError("unknown --weighting '" + weighting_name + "' (unit|sigma)");
  }
  config.regularization = reg;
  if (reg > 0.0) config.a_ref = init;
  config.max_iter = max_iter;
  config.model.variant = resolve_variant(variant_name);

  const FitResult result = fit(ds, init, config);

  std::ostringstream report;
  report << manifest.header_lines();
  report << "chi2: " << fd(result.chi2) << '\n';
  report << "ndf: " << result.ndf << '\n';
  report << "rms_lg: " << fd(result.rms_lg) << '\n';
  report << "converged: " << (result.converged ? "true" : "false") << '\n';
  report << "iterations: " << result.iterations.size() - 1 << '\n';
  report << '\n';
  serialize_parameters(report, result.params);
  atomic_write(out_path, report.str());
  std::cout << "fit: chi2/ndf = " << fd(result.chi2) << "/" << result.ndf
            << ", rms_lg = " << fd(result.rms_lg)
            << (result.converged ? "" : " (not converged)") << '\n';
  return 0;
}

int cmd_validate(const std::string& data, const std::string& params_spec,
                 const std::string& out_path, const std::string& variant_name) {
  RunManifest manifest;
  manifest.command = "validate";
  manifest.timestamp = now_utc();
  const Dataset ds = resolve_dataset(data, manifest);
  const ParameterSet params = resolve_params(params_spec, manifest);
  const RadiusVariant variant = resolve_variant(variant_name);
  const PhysicalConstants constants;

  std::ostringstream csv;
  csv << manifest.header_lines();
  csv << "element,A,Z,E_TKE_MeV,lg_T_exp_yr,lg_T_model_yr,delta_lg\n";
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& r : ds.records) {
    if (r.role != Role::Validate) continue;
    const KramersBreakdown b = log_half_life(r, params, constants, variant);
    const double lg_exp = std::log10(r.t_half_exp);
    const double delta = b.lg_t_half - lg_exp;
    worst = std::max(worst, std::abs(delta));
    ++count;
    csv << r.element << ',' << r.a << ',' << r.z << ',' << fd(r.e_tke) << ',' << fd(lg_exp)
        << ',' << fd(b.lg_t_half) << ',' << fd(delta) << '\n';
  }
  if (count == 0) throw DomainError("validate: dataset has no validate-role records");
  atomic_write(out_path, csv.str());
  std::cout << "validate: " << count << " records, max |delta lg T| = " << fd(worst) << '\n';
  return 0;
}

int cmd_invert(const std::string& data, const std::string& params_spec,
               const std::string& out_path, const std::string& variant_name) {
  RunManifest manifest;
  manifest.command = "invert";
  manifest.timestamp = now_utc();
  const Dataset ds = resolve_dataset(data, manifest);
  const ParameterSet params = resolve_params(params_spec, manifest);
  const RadiusVariant variant = resolve_variant(variant_name);
  const PhysicalConstants constants;

  std::ostringstream csv;
  csv << manifest.header_lines();
  csv << "element,A,Z,A_cl,Z_cl,Q_MeV,lg_T_target_yr,E_TKE_solved_MeV,E_TKE_tabulated_MeV,"
         "n_roots,ambiguous\n";
  std::size_t count = 0;
  for (const auto& r : ds.records) {
    if (r.role != Role::Predict) continue;
    const double target = std::log10(r.t_half_exp);
    const EtkeSolution sol = solve_etke(r, params, target, constants, variant);
    if (sol.ambiguous) {
      std::cerr << "invert: " << r.element << "-" << r.a << ": " << sol.all_roots.size()
                << " roots in [Q/2, Q]; reporting the one nearest Q(A-A_cl)/A\n";
    }
    ++count;
    csv << r.element << ',' << r.a << ',' << r.z << ',' << r.a_cl << ',' << r.z_cl << ','
        << fd(r.q_total) << ',' << fd(target) << ',' << fd(sol.e_tke) << ',' << fd(r.e_tke)
        << ',' << sol.all_roots.size() << ',' << (sol.ambiguous ? "true" : "false") << '\n';
  }
  if (count == 0) throw DomainError("invert: dataset has no predict-role records");
  atomic_write(out_path, csv.str());
  std::cout << "invert: solved " << count << " records\n";
  return 0;
}

int cmd_compare(const std::string& data, const std::string& params_spec,
                const std::string& out_path, const std::string& variant_name) {
  RunManifest manifest;
  manifest.command = "compare";
  manifest.timestamp = now_utc();
  const Dataset ds = resolve_dataset(data, manifest);
  const ParameterSet params = resolve_params(params_spec, manifest);
  const RadiusVariant variant = resolve_variant(variant_name);
  const PhysicalConstants constants;

  std::ostringstream csv;
  csv << manifest.header_lines();
  csv << "family,element,A,Z,E_TKE_MeV,lg_T_exp_yr,lg_T_kramers_yr,lg_T_gamow_yr,x\n";
  // family -> (E, lg T) points per source
  std::map<std::string, std::vector<std::pair<double, double>>> kr, gm, ex;
  for (const auto& r : ds.records) {
    if (r.decay_class != DecayClass::Alpha) continue;
    const std::string family =
        (r.element.empty() ? "Z" + std::to_string(r.z) : r.element) + "-alpha";
    const KramersBreakdown b = log_half_life(r, params, constants, variant);
    GamowInputs gin;
    gin.z = r.z;
    gin.a = r.a;
    gin.e_alpha = r.e_tke;
    gin.r_coul = 1.2 * (std::cbrt(static_cast<double>(r.a - 4)) + std::cbrt(4.0));
    gin.lg_omega_over_2pi = params.a[19];
    const double lg_gamow = gamow_log_half_life(gin, constants);
    const double lg_exp = std::log10(r.t_half_exp);
    csv << family << ',' << r.element << ',' << r.a << ',' << r.z << ',' << fd(r.e_tke) << ','
        << fd(lg_exp) << ',' << fd(b.lg_t_half) << ',' << fd(lg_gamow) << ','
        << fd(gin.x(constants)) << '\n';
    kr[family].emplace_back(r.e_tke, b.lg_t_half);
    gm[family].emplace_back(r.e_tke, lg_gamow);
    ex[family].emplace_back(r.e_tke, lg_exp);
  }
  atomic_write(out_path, csv.str());
  std::printf("%-14s %3s  %-8s %10s %10s %8s\n", "family", "n", "source", "C", "B", "R^2");
  for (const auto& [family, pts] : kr) {
    if (pts.size() < 3) continue;
    auto line = [&](const char* src, const std::vector<std::pair<double, double>>& p) {
      const GNFit f = geiger_nuttall_fit(p);
      std::printf("%-14s %3zu  %-8s %10.2f %10.2f %8.4f\n", family.c_str(), p.size(), src,
                  f.c, f.b, f.r_squared);
    };
    line("kramers", pts);
    line("gamow", gm[family]);
    line("expt", ex[family]);
  }
  return 0;
}

int cmd_simulate(double barrier, double eps, double gamma, std::uint64_t n_traj,
                 std::uint64_t seed, const std::string& out_path) {
  if (!(barrier > 0.0) || !(eps > 0.0)) {
    throw DomainError("simulate: --barrier and --eps must be positive");
  }
  RunManifest manifest;
  manifest.command = "simulate";
  manifest.timestamp = now_utc();
  manifest.seed = seed;
  manifest.has_seed = true;

  // cubic with unit curvature frequencies: U = x^2/2 - b x^3, barrier height
  // fixed by b; absorbing boundary at the far U = 0 crossing
  const double a = 0.5;
  const double b = std::sqrt(4.0 * a * a * a / (27.0 * barrier));
  const PotentialSpec pot = PotentialSpec::cubic(a, b);

  SimConfig config;
  config.mass = 1.0;
  config.gamma = gamma;
  config.eps = eps;
  config.dt = 0.05;
  config.x_init = 0.0;
  config.p_init = 0.0;
  config.absorb_x = a / b;
  config.n_traj = n_traj;
  config.seed = seed;

  const PotentialFeatures f = potential_features(pot, config.mass);
  std::vector<std::string> warnings;
  const double analytic =
      kramers_rate_full(f.delta_u, f.omega_min, f.omega_max, gamma / config.mass, eps,
                        &warnings);
  config.t_max = 50.0 / analytic;
  const EscapeStats stats = simulate_escape(pot, config);

  std::ostringstream csv;
  csv << manifest.header_lines();
  csv << "# barrier: " << fd(f.delta_u) << " (requested " << fd(barrier) << ")\n";
  csv << "# omega_min: " << fd(f.omega_min) << ", omega_max: " << fd(f.omega_max) << '\n';
  csv << "# mfpt: " << fd(stats.mfpt) << '\n';
  csv << "# mfpt_stderr: " << fd(stats.mfpt_stderr) << '\n';
  csv << "# rate: " << fd(stats.rate) << '\n';
  csv << "# analytic_rate: " << fd(analytic) << '\n';
  csv << "# ratio: " << fd(stats.rate / analytic) << '\n';
  csv << "# n_escaped: " << stats.n_escaped << ", n_censored: " << stats.n_censored << '\n';
  for (const auto& w : warnings) csv << "# warning: " << w << '\n';
  csv << "traj_id,escape_time,censored\n";
  for (std::size_t k = 0; k < stats.escape_times.size(); ++k) {
    csv << k << ',' << fd(stats.escape_times[k]) << ',' << (stats.censored[k] ? 1 : 0) << '\n';
  }
  atomic_write(out_path, csv.str());
  std::cout << "simulate: rate = " << fd(stats.rate) << " vs analytic " << fd(analytic)
            << " (ratio " << fd(stats.rate / analytic) << ")\n";
  for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diffusion half-life model for alpha decay, cluster radioactivity, "
               "and spontaneous fission"};
  app.require_subcommand(1);

  std::string data = "embedded";
  std::string params_spec = "table4";
  std::string init_spec = "table4";
  std::string out_path;
  std::string weighting = "unit";
  std::string variant = "a-minus-acl";
  double reg = 0.0;
  int max_iter = 200;
  double barrier = 1.0, eps = 1.0 / 6.0, gamma = 0.5;
  std::uint64_t n_traj = 10000, seed = 42;

  auto add_common = [&](CLI::App* sub, bool with_params) {
    sub->add_option("--data", data, "'embedded' or a dataset CSV path");
    if (with_params) sub->add_option("--params", params_spec, "'table4' or a parameter file");
    sub->add_option("--out", out_path, "output file")->required();
    sub->add_option("--variant", variant,
                    "radius form: a-minus-acl (calibrated) or as-printed");
  };

  auto* predict = app.add_subcommand("predict", "half-lives for every record");
  add_common(predict, true);

  auto* fit_cmd = app.add_subcommand("fit", "refit the 20 parameters");
  add_common(fit_cmd, false);
  fit_cmd->add_option("--init", init_spec, "start point: table4, zero, or a file");
  fit_cmd->add_option("--weighting", weighting, "unit or sigma");
  fit_cmd->add_option("--reg", reg, "Tikhonov weight toward the start point");
  fit_cmd->add_option("--max-iter", max_iter, "iteration cap");

  auto* validate_cmd = app.add_subcommand("validate", "superheavy hold-out comparison");
  add_common(validate_cmd, true);

  auto* invert = app.add_subcommand("invert", "solve E_TKE from measured half-lives");
  add_common(invert, true);

  auto* compare = app.add_subcommand("compare", "Kramers vs Gamow vs Geiger-Nuttall");
  add_common(compare, true);

  auto* simulate = app.add_subcommand("simulate", "Langevin escape study on a cubic barrier");
  simulate->add_option("--barrier", barrier, "barrier height, model units");
  simulate->add_option("--eps", eps, "bath mean energy");
  simulate->add_option("--gamma", gamma, "friction");
  simulate->add_option("--traj", n_traj, "trajectory count");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (predict->parsed()) return cmd_predict(data, params_spec, out_path, variant);
    if (fit_cmd->parsed())
      return cmd_fit(data, init_spec, out_path, weighting, reg, max_iter, variant);
    if (validate_cmd->parsed()) return cmd_validate(data, params_spec, out_path, variant);
    if (invert->parsed()) return cmd_invert(data, params_spec, out_path, variant);
    if (compare->parsed()) return cmd_compare(data, params_spec, out_path, variant);
    if (simulate->parsed()) return cmd_simulate(barrier, eps, gamma, n_traj, seed, out_path);
  } catch (const decay::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
