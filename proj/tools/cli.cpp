#include "cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gosperwalk/brownian.hpp"
#include "gosperwalk/cancel_poly.hpp"
#include "gosperwalk/errors.hpp"
#include "gosperwalk/harness.hpp"
#include "gosperwalk/matching.hpp"
#include "gosperwalk/report.hpp"
#include "gosperwalk/walk.hpp"

namespace gosperwalk::cli {

namespace {

struct BetaArgs {
  std::string roots_file;
  std::string out;
};

struct SimulateArgs {
  std::string model;
  std::optional<std::size_t> m;
  std::optional<double> lambda;
  std::optional<Count> n;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sweep;
  std::string out;
  std::string format = "csv";
  std::string pmf;
  std::string method = "auto";
  unsigned threads = 0;
  bool no_timing = false;
};

struct BrownianArgs {
  std::optional<std::string> law;
  std::size_t steps = 10'000;
  double two_v = 1.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string diagnostic;
  double t = 0.5;
  double epsilon = 0.01;
  double alpha = 0.001;
  std::string out;
  unsigned threads = 0;
  bool no_timing = false;
};

struct VerifyArgs {
  std::int64_t cap = 8;
  std::size_t cases = 1000;
  std::uint64_t seed = 1;
};

int cmd_beta(const BetaArgs& a, std::ostream& out) {
  const RootConfig config = report::parse_roots(report::read_file(a.roots_file));
  config.validate();
  const WalkStats walk = compute_walk(config);
  const Matching matching = stack_matching(config);
  const CancellationTriple triple = cancellation_from_matching(matching, config);
  const bool verified = verify_triple(config, triple);

  out << fmt::format("beta = {}\n", walk.beta);
  out << fmt::format("tau = {}\n", walk.tau);
  std::string pairs;
  for (const auto& p : matching.pairs) pairs += fmt::format(" ({},{})", p.red, p.blue);
  out << "pairs =" << (pairs.empty() ? " none" : pairs) << "\n";
  out << fmt::format("unmatched red = [{}]\n", fmt::join(matching.unmatched_red, ","));
  out << fmt::format("unmatched blue = [{}]\n", fmt::join(matching.unmatched_blue, ","));
  for (const auto& [label, poly] : {std::pair{"a", &triple.a}, {"b", &triple.b}, {"c", &triple.c}}) {
    std::vector<std::string> coeffs;
    for (const auto& c : expand_poly(*poly)) coeffs.push_back(c.str());
    out << fmt::format("{} = {}  roots [{}]  coefficients [{}]\n", label,
                       report::poly_factored(*poly), fmt::join(poly->roots, ","),
                       fmt::join(coeffs, ","));
  }
  out << (verified ? "verified\n" : "VERIFICATION FAILED\n");

  if (!a.out.empty()) {
    nlohmann::ordered_json doc;
    doc["m"] = config.m();
    doc["A"] = config.red;
    doc["B"] = config.blue;
    doc["beta"] = walk.beta;
    doc["tau"] = walk.tau;
    doc["matching"] = report::matching_json(matching);
    doc["triple"] = report::triple_json(triple);
    doc["verified"] = verified;
    report::write_file(a.out, doc.dump(2) + "\n");
  }
  return verified ? kExitOk : kExitFailed;
}

ModelSpec build_model(const SimulateArgs& a) {
  ModelSpec spec;
  const std::string& name = a.model;
  const bool needs_lambda = name != "custom";
  if (needs_lambda && !a.lambda) throw InvalidInput("--lambda is required for --model " + name);
  if (a.lambda && !(*a.lambda > 0)) throw InvalidInput("--lambda must be positive");
  spec.lambda = a.lambda.value_or(0.0);
  if (name == "custom" && a.pmf.empty()) throw InvalidInput("--model custom requires --pmf PATH");
  if (name != "custom" && !a.pmf.empty()) throw InvalidInput("--pmf is only valid with --model custom");

  if (name == "uniform-r") {
    spec.model = Model::UniformR;
  } else if (name == "multiset-r") {
    spec.model = Model::MultisetR;
  } else if (name == "iid-poisson" || name == "iid-geometric") {
    spec.model = Model::Iid;
    spec.F = name == "iid-poisson" ? Distribution::poisson(spec.lambda)
                                   : Distribution::geometric(spec.lambda);
    if (a.n) throw InvalidInput("--n does not apply to unconditioned models");
  } else if (name == "cond-poisson" || name == "cond-geometric") {
    spec.model = Model::Conditioned;
    spec.F = name == "cond-poisson" ? Distribution::poisson(spec.lambda)
                                    : Distribution::geometric(spec.lambda);
  } else if (name == "custom") {
    spec.model = Model::Conditioned;
    spec.F = report::parse_pmf(report::read_file(a.pmf));
    if (!a.n && !a.lambda) spec.lambda = spec.F->mean();
  } else {
    throw InvalidInput("unknown model '" + name + "'");
  }
  spec.n = a.n;
  return spec;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  if (!a.m && a.sweep.empty()) throw InvalidInput("--m is required (or give --sweep)");
  if (a.format != "csv" && a.format != "json") throw InvalidInput("--format must be csv or json");
  if (a.trials < 2) throw InvalidInput("--trials must be at least 2");
  if (!a.sweep.empty() && a.n) throw InvalidInput("--n cannot be combined with --sweep");
  ModelSpec spec = build_model(a);

  ExperimentOptions opt;
  opt.threads = a.threads;
  if (a.method == "general")
    opt.method = ConditionedMethod::General;
  else if (a.method != "auto")
    throw InvalidInput("--method must be auto or general");

  std::vector<EstimateReport> reports;
  if (!a.sweep.empty()) {
    reports = sweep(spec, a.sweep, a.trials, a.seed, opt);
  } else {
    spec.m = *a.m;
    reports.push_back(run_experiment(spec, a.trials, a.seed, opt));
  }

  for (const auto& r : reports) {
    out << fmt::format("{} m={} n={} trials={} mean_beta={:.6f} normalized={:.6f} reference={:.6f} z={:.3f}\n",
                       r.model.label(), r.m, r.n ? std::to_string(*r.n) : std::string("-"), r.trials,
                       r.mean_beta, r.normalized, r.reference, r.z_score);
  }
  report::WriteOptions wo{!a.no_timing};
  const std::string body =
      a.format == "csv" ? report::estimates_csv(reports, wo) : report::estimates_json(reports, wo);
  if (a.out.empty())
    out << body;
  else
    report::write_file(a.out, body);
  return kExitOk;
}

int cmd_brownian(const BrownianArgs& a, std::ostream& out) {
  std::optional<Law> law;
  if (a.law) law = parse_law(*a.law);
  report::WriteOptions wo{!a.no_timing};

  std::string body;
  int code = kExitOk;
  if (a.diagnostic.empty()) {
    const auto est = estimate_beta_star(law.value_or(Law::Bridge), a.steps, a.two_v, a.trials,
                                        a.seed, a.threads);
    out << fmt::format("{} steps={} twoV={} trials={} mean_beta_star={:.6f} se={:.6f} reference={:.6f}\n",
                       law_name(est.law), est.steps, est.two_v, est.trials, est.mean, est.std_error,
                       est.reference);
    out << fmt::format("d1_mean={:.6f} d2_mean={:.6f} d1_reference={:.6f}\n", est.d1_mean,
                       est.d2_mean, est.d1_reference);
    body = report::brownian_json(est, wo).dump(2) + "\n";
  } else {
    const Diagnostic which = parse_diagnostic(a.diagnostic);
    DiagnosticParams p;
    p.law = law;
    p.steps = a.steps;
    p.two_v = a.two_v;
    p.t = a.t;
    p.epsilon = a.epsilon;
    p.alpha = a.alpha;
    p.threads = a.threads;
    const auto d = run_diagnostic(which, p, a.trials, a.seed);
    out << fmt::format("{} law={} t={} statistic={:.6g} reference={:.6g} threshold={:.6g}{} {}\n",
                       d.name, law_name(d.law), d.t, d.statistic, d.reference, d.threshold,
                       d.p_value ? fmt::format(" p={:.4g}", *d.p_value) : std::string(),
                       d.pass ? "PASS" : "FAIL");
    body = report::diagnostic_json(d).dump(2) + "\n";
    code = d.pass ? kExitOk : kExitFailed;
  }
  if (a.out.empty())
    out << body;
  else
    report::write_file(a.out, body);
  return code;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.cap > kMaxVerifyCap)
    throw InvalidInput(fmt::format("--cap {} exceeds the maximum of {}", a.cap, kMaxVerifyCap));
  if (a.cap < 0) throw InvalidInput("--cap must be nonnegative");
  const VerifyOutcome v = run_verification(a.cap, a.cases, a.seed);
  out << fmt::format("exhaustive configs checked: {}\nrandom cases checked: {}\n",
                     v.exhaustive_configs, v.random_cases);
  if (v.counterexample) {
    out << "counterexample: " << v.failure << "\n";
    return kExitFailed;
  }
  out << "all routes agree\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cancellation-degree walk toolkit: exact beta, Monte Carlo estimates, Brownian diagnostics",
               "gosperwalk"};
  app.require_subcommand(1);

  BetaArgs beta;
  auto* beta_cmd = app.add_subcommand("beta", "beta, optimal matching and cancellation triple for a roots file");
  beta_cmd->add_option("roots_file", beta.roots_file, "JSON roots file {m, A, B}")->required();
  beta_cmd->add_option("--out", beta.out, "Also write a JSON document with the result");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of E beta / m^{3/2}");
  sim_cmd->add_option("--model", sim.model, "uniform-r|multiset-r|iid-poisson|iid-geometric|cond-poisson|cond-geometric|custom")
      ->required()
      ->check(CLI::IsMember({"uniform-r", "multiset-r", "iid-poisson", "iid-geometric", "cond-poisson",
                             "cond-geometric", "custom"}));
  sim_cmd->add_option("--m", sim.m, "Number of urns");
  sim_cmd->add_option("--lambda", sim.lambda, "Mean of F / ratio n/m");
  sim_cmd->add_option("--n", sim.n, "Balls per colour (default round(lambda m))");
  sim_cmd->add_option("--trials", sim.trials, "Number of trials")->required();
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--sweep", sim.sweep, "Comma-separated increasing m values")->delimiter(',');
  sim_cmd->add_option("--out", sim.out, "Report path (stdout when omitted)");
  sim_cmd->add_option("--format", sim.format, "csv|json");
  sim_cmd->add_option("--pmf", sim.pmf, "pmf file for --model custom");
  sim_cmd->add_option("--method", sim.method, "auto|general conditioned sampler");
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (default GOSPERWALK_THREADS or all cores)");
  sim_cmd->add_flag("--no-timing", sim.no_timing, "Write wall_time_s as 0");

  BrownianArgs br;
  auto* br_cmd = app.add_subcommand("brownian", "beta* estimates and diagnostics on Brownian paths");
  br_cmd->add_option("--law", br.law, "motion|bridge");
  br_cmd->add_option("--steps", br.steps, "Grid steps N");
  br_cmd->add_option("--twoV", br.two_v, "Amplitude parameter 2V");
  br_cmd->add_option("--trials", br.trials, "Number of paths");
  br_cmd->add_option("--seed", br.seed, "Master seed");
  br_cmd->add_option("--diagnostic", br.diagnostic, "Diagnostic name");
  br_cmd->add_option("--t", br.t, "Time parameter for diagnostics");
  br_cmd->add_option("--epsilon", br.epsilon, "Perturbation size for lipschitz");
  br_cmd->add_option("--alpha", br.alpha, "Significance level for KS diagnostics");
  br_cmd->add_option("--out", br.out, "Report path (stdout when omitted)");
  br_cmd->add_option("--threads", br.threads, "Worker threads");
  br_cmd->add_flag("--no-timing", br.no_timing, "Write wall_time_s as 0");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Cross-check walk, stack matching, brute force and triples");
  ver_cmd->add_option("--cap", ver.cap, "Brute-force ball cap (at most 12)");
  ver_cmd->add_option("--cases", ver.cases, "Random cases after the exhaustive suite");
  ver_cmd->add_option("--seed", ver.seed, "Seed for random cases");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (beta_cmd->parsed()) return cmd_beta(beta, out);
    if (sim_cmd->parsed()) return cmd_simulate(sim, out);
    if (br_cmd->parsed()) return cmd_brownian(br, out);
    if (ver_cmd->parsed()) return cmd_verify(ver, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gosperwalk::cli
