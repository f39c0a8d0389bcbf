// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands:
//   mean       run an estimator over a samples file
//   check      unimodularity / ad-invariance / critical-point / symmetric-mean
//   geodesic   integrate a geodesic of a left-invariant metric
//   distance   evaluate a distance between two elements
//   propagate  first-order (mean, covariance) propagation under the product
//   sample     generate deterministic sample files
//
// Exit codes: 0 success, 1 usage/parse error, 2 solver did not converge,
// 3 chart/domain error (offending sample indices in the JSON payload).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <liemeans/covariance.hpp>
#include <liemeans/json_io.hpp>
#include <liemeans/lie_core.hpp>

namespace {

using namespace liemeans;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitDomain = 3;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot open output file: " + output_path);
  out << text << "\n";
}

Vector parse_vector_flag(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError("cannot parse vector entry '" + item + "'");
    }
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

struct CommonOpts {
  std::string group;
  std::string input;
  std::string metric;
  std::string output;
  double tol = 1e-10;
  int max_iter = 200;
  std::uint64_t seed = 0;
};

SolverConfig make_solver_config(const CommonOpts& opts, const std::string& init,
                                const std::string& init_file, const GroupSpec& spec) {
  SolverConfig cfg;
  cfg.tol = opts.tol;
  cfg.max_iter = opts.max_iter;
  if (init == "projected") {
    cfg.init = SolverConfig::Init::Projected;
  } else if (init == "identity") {
    cfg.init = SolverConfig::Init::Identity;
  } else if (init == "first-sample") {
    cfg.init = SolverConfig::Init::FirstSample;
  } else if (init == "given") {
    if (init_file.empty()) throw ParseError("--init given requires --init-point FILE");
    cfg.init = SolverConfig::Init::Given;
    cfg.init_point = load_element(init_file, spec);
  } else {
    throw ParseError("unknown --init '" + init + "'");
  }
  return cfg;
}

DistanceKind make_distance_kind(const std::string& name, const GroupSpec& spec,
                                const std::string& metric_path, double mass) {
  if (name == "chordal") return DistanceKind::chordal();
  if (name == "body-se") return DistanceKind::body_se(mass);
  if (name == "product-se3") return DistanceKind::product_se3();
  if (name == "lognorm" || name == "geodesic") {
    if (metric_path.empty()) {
      throw ParseError("--distance " + name + " requires --metric FILE");
    }
    InnerProduct ip = load_metric(metric_path, spec);
    return name == "lognorm" ? DistanceKind::log_norm(std::move(ip))
                             : DistanceKind::geodesic(std::move(ip));
  }
  throw ParseError("unknown --distance '" + name + "'");
}

int run_mean(const CommonOpts& opts, const std::string& method,
             const std::string& distance_name, double mass,
             const std::string& init, const std::string& init_file,
             const std::string& center_file, bool no_hemisphere_align) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  const EmpiricalDistribution d = load_samples(opts.input, spec);

  if (method == "euclidean") {
    emit(euclidean_mean_to_json_string(euclidean_mean(d)), opts.output);
    return kExitOk;
  }

  MeanReport report;
  if (method == "projected") {
    report = projected_mean(d);
  } else if (method == "log-euclidean") {
    const GroupElement center =
        center_file.empty() ? identity(spec) : load_element(center_file, spec);
    report = log_euclidean_mean(d, center);
  } else if (method == "group") {
    report = group_theoretic_mean(d, make_solver_config(opts, init, init_file, spec));
  } else if (method == "frechet") {
    const DistanceKind kind = make_distance_kind(distance_name, spec, opts.metric, mass);
    report = frechet_mean(d, kind, make_solver_config(opts, init, init_file, spec));
  } else if (method == "karcher") {
    if (opts.metric.empty()) throw ParseError("--method karcher requires --metric FILE");
    const InnerProduct ip = load_metric(opts.metric, spec);
    report = karcher_mean(d, ip, make_solver_config(opts, init, init_file, spec));
  } else if (method == "quat") {
    report = quaternion_projected_mean(d, !no_hemisphere_align);
  } else {
    throw ParseError("unknown --method '" + method + "'");
  }

  emit(mean_report_to_json_string(report), opts.output);
  return report.converged ? kExitOk : kExitNonConvergence;
}

int run_check(const CommonOpts& opts, const std::string& what,
              const std::string& at_file) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  json out;
  out["check"] = what;
  out["group"] = spec.name();

  if (what == "unimodular") {
    const StructureConstants& c = spec.structure_constants();
    double max_residual = 0.0;
    for (int i = 0; i < spec.algebra_dim(); ++i) {
      double trace = 0.0;
      for (int j = 0; j < spec.algebra_dim(); ++j) trace += c(i, j, j);
      max_residual = std::max(max_residual, std::abs(trace));
    }
    out["verdict"] = is_unimodular(spec);
    out["residual"] = max_residual;
  } else if (what == "ad-invariance") {
    if (opts.metric.empty()) throw ParseError("check ad-invariance requires --metric FILE");
    const AdInvarianceReport report = is_ad_invariant(load_metric(opts.metric, spec));
    out["verdict"] = report.invariant;
    out["failing_condition"] = report.failing_condition;
    out["residuals"] = {{"skew_isometry", report.residual_skew_isometry},
                        {"random_probe", report.residual_random_probe},
                        {"slab_symmetry", report.residual_slab_symmetry}};
  } else if (what == "critical-point") {
    if (opts.metric.empty() || opts.input.empty()) {
      throw ParseError("check critical-point requires --metric and --input");
    }
    const InnerProduct ip = load_metric(opts.metric, spec);
    const EmpiricalDistribution d = load_samples(opts.input, spec);
    const GroupElement at = at_file.empty() ? identity(spec) : load_element(at_file, spec);
    Vector r = Vector::Zero(spec.algebra_dim());
    const GroupElement at_inv = inverse(at);
    for (std::size_t i = 0; i < d.size(); ++i) {
      r += d.weights[i] * group_log(mul(at_inv, d.samples[i])).coords;
    }
    const Vector grad = cost_L_gradient(d, ip, at);
    out["group_mean_residual"] = r.norm();
    out["cost_gradient_norm"] = grad.norm();
    out["is_group_mean"] = r.norm() < opts.tol;
    out["is_critical_point"] = grad.norm() < opts.tol;
    out["verdict"] = (r.norm() < opts.tol) && (grad.norm() < opts.tol);
  } else if (what == "symmetric-mean") {
    if (opts.input.empty() || at_file.empty()) {
      throw ParseError("check symmetric-mean requires --input and --at");
    }
    const EmpiricalDistribution d = load_samples(opts.input, spec);
    const GroupElement mu = load_element(at_file, spec);
    Vector r = Vector::Zero(spec.algebra_dim());
    const GroupElement mu_inv = inverse(mu);
    for (std::size_t i = 0; i < d.size(); ++i) {
      r += d.weights[i] * group_log(mul(mu_inv, d.samples[i])).coords;
    }
    const double grad_norm = weighted_cost_gradient(d, mu).norm();
    out["unimodular"] = is_unimodular(spec);
    out["group_mean_residual"] = r.norm();
    out["weighted_cost_gradient_norm"] = grad_norm;
    out["verdict"] = is_unimodular(spec) && r.norm() < opts.tol && grad_norm < 1e-8;
  } else {
    throw ParseError("unknown check '" + what + "'");
  }

  emit(out.dump(2), opts.output);
  return kExitOk;
}

int run_geodesic(const CommonOpts& opts, const std::string& xi_text, double t_end,
                 int steps, const std::string& start_file) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  if (opts.metric.empty()) throw ParseError("geodesic requires --metric FILE");
  const InnerProduct ip = load_metric(opts.metric, spec);
  const Vector xi = parse_vector_flag(xi_text);
  if (xi.size() != spec.algebra_dim()) {
    throw ParseError("--xi has wrong length for group " + spec.name());
  }
  const GroupElement start =
      start_file.empty() ? identity(spec) : load_element(start_file, spec);
  const Trajectory traj = geodesic_flow(ip, start, hat(spec, xi), t_end, steps);
  emit(trajectory_to_json_string(traj), opts.output);
  return kExitOk;
}

int run_distance(const CommonOpts& opts, const std::string& kind_name, double mass) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  const EmpiricalDistribution d = load_samples(opts.input, spec);
  if (d.size() != 2) {
    throw ParseError("distance expects an --input file with exactly two samples");
  }
  const DistanceKind kind = make_distance_kind(kind_name, spec, opts.metric, mass);
  json out;
  out["kind"] = kind_name;
  out["distance"] = distance(kind, d.samples[0], d.samples[1]);
  emit(out.dump(2), opts.output);
  return kExitOk;
}

int run_propagate(const CommonOpts& opts) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  std::ifstream in(opts.input);
  if (!in) throw ParseError("cannot open file: " + opts.input);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(opts.input + ": " + e.what());
  }
  for (const char* key : {"mu1", "Sigma1", "mu2", "Sigma2"}) {
    if (!j.contains(key)) throw ParseError(opts.input + ": missing field '" + key + "'");
  }
  const auto load_mu = [&](const json& node) {
    return element_from_json_string(node.dump(), spec);
  };
  const auto load_sigma = [&](const json& node) {
    const int n = spec.algebra_dim();
    Matrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        s(i, k) = node.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).get<double>();
      }
    return s;
  };
  const auto [mu12, sigma12] = propagate(load_mu(j["mu1"]), load_sigma(j["Sigma1"]),
                                         load_mu(j["mu2"]), load_sigma(j["Sigma2"]));
  json out;
  out["mu12"] = json::parse(std::string("{\"matrix\":") +
                            matrix_to_json_string(mu12.mat) + "}");
  out["Sigma12"] = json::parse(matrix_to_json_string(sigma12));
  emit(out.dump(2), opts.output);
  return kExitOk;
}

int run_sample(const CommonOpts& opts, const std::string& type,
               const std::string& mu_file, double sigma, int n, bool symmetrize) {
  const GroupSpec spec = group_from_name_or_file(opts.group);
  EmpiricalDistribution d{spec, {}, {}};
  if (type == "haar") {
    d = sample_uniform_haar(spec, n, RngSeed{opts.seed});
  } else if (type == "concentrated") {
    const GroupElement mu =
        mu_file.empty() ? identity(spec) : load_element(mu_file, spec);
    const Matrix cov = sigma * sigma *
                       Matrix::Identity(spec.algebra_dim(), spec.algebra_dim());
    d = symmetrize
            ? sample_concentrated_symmetrized(spec, mu, cov, n, RngSeed{opts.seed})
            : sample_concentrated(spec, mu, cov, n, RngSeed{opts.seed});
  } else {
    throw ParseError("unknown sample --type '" + type + "'");
  }
  if (opts.output.empty()) throw ParseError("sample requires --output FILE");
  save_samples(d, opts.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"means and covariances of random variables on matrix Lie groups"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string method = "group";
  std::string distance_name = "chordal";
  std::string init = "projected";
  std::string init_file, center_file, at_file, xi_text = "0", type = "concentrated",
              mu_file;
  double mass = 1.0, t_end = 1.0, sigma = 0.1;
  int steps = 100, n_samples = 100;
  bool no_hemisphere_align = false, symmetrize = false;

  const auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_option("--group", opts.group, "built-in name or group-spec JSON file")
        ->required();
    auto* in = cmd->add_option("--input", opts.input, "samples JSON file");
    if (needs_input) in->required();
    cmd->add_option("--metric", opts.metric, "metric JSON file {group, W}");
    cmd->add_option("--output", opts.output, "write the JSON report here (default stdout)");
    cmd->add_option("--tol", opts.tol, "solver tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", opts.max_iter, "iteration budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "RNG seed (deterministic streams)");
  };

  CLI::App* mean = app.add_subcommand("mean", "estimate a mean of a sample set");
  add_common(mean, true);
  mean->add_option("--method", method,
                   "euclidean|projected|log-euclidean|group|frechet|karcher|quat");
  mean->add_option("--distance", distance_name,
                   "chordal|lognorm|geodesic|body-se|product-se3 (frechet)");
  mean->add_option("--mass", mass, "mass parameter of body-se");
  mean->add_option("--init", init, "projected|identity|first-sample|given");
  mean->add_option("--init-point", init_file, "element JSON file for --init given");
  mean->add_option("--center", center_file, "chart center for log-euclidean");
  mean->add_flag("--no-hemisphere-align", no_hemisphere_align,
                 "disable quaternion hemisphere alignment (quat method)");

  CLI::App* check = app.add_subcommand("check", "verify structural properties");
  check->require_subcommand(1);
  for (const char* what : {"unimodular", "ad-invariance", "critical-point",
                           "symmetric-mean"}) {
    CLI::App* sub = check->add_subcommand(what);
    add_common(sub, false);
    sub->add_option("--at", at_file, "evaluation point (element JSON file)");
  }

  CLI::App* geodesic = app.add_subcommand("geodesic", "integrate a geodesic");
  add_common(geodesic, false);
  geodesic->add_option("--xi", xi_text, "initial body velocity, comma-separated")
      ->required();
  geodesic->add_option("--t", t_end, "final time");
  geodesic->add_option("--steps", steps, "RK4 steps")->check(CLI::PositiveNumber);
  geodesic->add_option("--start", mu_file, "starting element (default identity)");

  CLI::App* dist = app.add_subcommand("distance", "distance between two elements");
  add_common(dist, true);
  dist->add_option("--kind", distance_name,
                   "chordal|lognorm|geodesic|body-se|product-se3");
  dist->add_option("--mass", mass, "mass parameter of body-se");

  CLI::App* prop = app.add_subcommand("propagate",
                                      "first-order mean/covariance propagation");
  add_common(prop, true);

  CLI::App* sample = app.add_subcommand("sample", "generate a samples file");
  add_common(sample, false);
  sample->add_option("--type", type, "concentrated|haar");
  sample->add_option("--mu", mu_file, "center element JSON (concentrated)");
  sample->add_option("--sigma", sigma, "isotropic spread (concentrated)");
  sample->add_option("--n", n_samples, "sample count")->check(CLI::PositiveNumber);
  sample->add_flag("--symmetrize", symmetrize, "emit symmetric pairs about mu");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mean->parsed()) {
      return run_mean(opts, method, distance_name, mass, init, init_file,
                      center_file, no_hemisphere_align);
    }
    if (check->parsed()) {
      CLI::App* sub = check->get_subcommands().front();
      return run_check(opts, sub->get_name(), at_file);
    }
    if (geodesic->parsed()) {
      return run_geodesic(opts, xi_text, t_end, steps, mu_file);
    }
    if (dist->parsed()) {
      return run_distance(opts, distance_name, mass);
    }
    if (prop->parsed()) {
      return run_propagate(opts);
    }
    if (sample->parsed()) {
      return run_sample(opts, type, mu_file, sigma, n_samples, symmetrize);
    }
  } catch (const DomainError& e) {
    json err;
    err["error"] = {{"type", "DomainError"}, {"message", e.what()}};
    err["error"]["sample_indices"] = e.sample_indices;
    std::cerr << err.dump(2) << std::endl;
    return kExitDomain;
  } catch (const NonConvergenceError& e) {
    json err;
    err["error"] = {{"type", "NonConvergence"},
                    {"message", e.what()},
                    {"best_residual", e.best_residual},
                    {"iterations", e.iterations}};
    std::cerr << err.dump(2) << std::endl;
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"type", "UsageError"}, {"message", e.what()}};
    std::cerr << err.dump(2) << std::endl;
    return kExitUsage;
  }
  return kExitUsage;
}
