#include "chainconic/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chainconic/cli/config_io.hpp"
#include "chainconic/cli/svg.hpp"

namespace chainconic::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool write_output(const std::optional<std::string>& path, const std::string& text, std::ostream& out,
                  std::ostream& err) {
  if (!path) {
    out << text;
    return true;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << *path << "'\n";
    return false;
  }
  return true;
}

ChainConfiguration<Rational> load_config(const std::string& input, const std::optional<std::string>& scenario_name,
                                         std::istream& in) {
  if (scenario_name) {
    if (!input.empty()) throw UsageError("give either a configuration file or --scenario, not both");
    return scenario(*scenario_name);
  }
  if (input.empty()) throw UsageError("missing configuration file (or --scenario)");
  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw UsageError("cannot read '" + input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return parse_config(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid configuration: ") + e.what());
  }
}

json error_json(const GeometryError& e) {
  json doc{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (e.cause()) doc["cause"] = to_string(*e.cause());
  if (e.index()) doc["index"] = *e.index();
  return doc;
}

struct TrialResult {
  VerificationReport report;
  std::size_t attempts = 0;
};

}  // namespace

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  ChainConfiguration<Rational> config;
  try {
    if (options.scenario) {
      config = scenario(*options.scenario);
    } else {
      if (!options.n) throw UsageError("--n is required");
      if (*options.n < 3) throw UsageError("--n must be greater than 2");
      GeneratorProfile profile;
      profile.separation = options.profile;
      profile.seed = options.seed;
      profile.grid_bound = options.grid_bound;
      config = random_config(*options.n, profile);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::ExhaustedRetries) return kExitExhausted;
    return kExitUsage;
  }
  return write_output(options.out, dump_config(config), out, err) ? kExitPass : kExitUsage;
}

int cmd_verify(const VerifyOptions& options, std::istream& in, std::ostream& out, std::ostream& err) {
  ChainConfiguration<Rational> config;
  try {
    config = load_config(options.input, options.scenario, in);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto report = verify_configuration(config, options.backend, options.tolerance);
  const std::string text = options.pretty ? report_to_table(report) : report_to_json(report).dump(2) + "\n";
  if (!write_output(options.out, text, out, err)) return kExitUsage;
  return report.exit_code();
}

SweepSummary run_sweep(const SweepOptions& options) {
  struct Task {
    std::size_t row;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t r = 0; r < options.n_list.size(); ++r) {
    for (std::size_t k = 0; k < options.trials; ++k) tasks.push_back({r, k});
  }
  std::vector<TrialResult> results(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        GeneratorProfile profile;
        profile.separation = options.profile;
        profile.seed = options.seed0 + tasks[i].trial;
        const auto generated = generate_config(options.n_list[tasks[i].row], profile);
        results[i] = {verify_configuration(generated.config, options.backend, options.tolerance), generated.attempts};
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::size_t jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  SweepSummary summary;
  summary.pass = true;
  for (std::size_t r = 0; r < options.n_list.size(); ++r) {
    SweepRow row;
    row.n = options.n_list[r];
    row.trials = options.trials;
    summary.rows.push_back(row);
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& row = summary.rows[tasks[i].row];
    const auto& report = results[i].report;
    row.rejections += results[i].attempts - 1;
    if (report.pass()) ++row.passed;
    if (report.closure) {
      if (report.closure->pass) ++row.closure_pass;
      row.max_closure_residual = std::max(row.max_closure_residual, std::abs(report.closure->residual_value));
    }
    if (report.conic) {
      if (report.conic->pass) ++row.conic_pass;
      row.max_conic_spread = std::max(row.max_conic_spread, report.conic->max_relative_spread);
      if (report.conic->kind) ++row.kinds[std::string(to_string(*report.conic->kind))];
    }
    if (report.proof_step && report.proof_step->pass) ++row.proof_step_pass;
    if (report.brianchon && report.brianchon->pass) ++row.brianchon_pass;
    if (report.error && is_degeneracy(report.error->kind)) ++row.degenerate;
  }
  for (const auto& row : summary.rows) {
    if (row.n % 2 == 0) {
      summary.pass = summary.pass && row.passed == row.trials;
    } else {
      summary.pass = summary.pass && row.closure_fail_rate() >= options.odd_threshold;
    }
  }
  return summary;
}

json sweep_to_json(const SweepOptions& options, const SweepSummary& summary) {
  json rows = json::array();
  for (const auto& row : summary.rows) {
    json entry{{"n", row.n},
               {"trials", row.trials},
               {"passed", row.passed},
               {"closurePass", row.closure_pass},
               {"closureFailRate", row.closure_fail_rate()},
               {"conicPass", row.conic_pass},
               {"proofStepPass", row.proof_step_pass},
               {"degenerate", row.degenerate},
               {"rejections", row.rejections},
               {"maxClosureResidual", row.max_closure_residual},
               {"maxConicSpread", row.max_conic_spread},
               {"kinds", row.kinds}};
    if (row.n == 6) entry["brianchonPass"] = row.brianchon_pass;
    rows.push_back(std::move(entry));
  }
  return {{"backend", to_string(options.backend)},
          {"tolerance", options.tolerance},
          {"profile", to_string(options.profile)},
          {"seed0", options.seed0},
          {"trials", options.trials},
          {"oddThreshold", options.odd_threshold},
          {"rows", std::move(rows)},
          {"pass", summary.pass}};
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  if (options.trials == 0) {
    err << "error: --trials must be positive\n";
    return kExitUsage;
  }
  for (std::size_t n : options.n_list) {
    if (n < 3) {
      err << "error: every n in --n-list must be greater than 2\n";
      return kExitUsage;
    }
  }
  SweepSummary summary;
  try {
    summary = run_sweep(options);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ExhaustedRetries ? kExitExhausted : kExitUsage;
  }
  std::string text;
  if (options.pretty) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(8) << "trials" << std::setw(8) << "passed" << std::setw(9)
       << "closure" << std::setw(7) << "conic" << std::setw(7) << "proof" << std::setw(11) << "brianchon"
       << std::setw(10) << "rejected" << "max residual\n";
    for (const auto& row : summary.rows) {
      os << std::setw(5) << row.n << std::setw(8) << row.trials << std::setw(8) << row.passed << std::setw(9)
         << row.closure_pass << std::setw(7) << row.conic_pass << std::setw(7) << row.proof_step_pass << std::setw(11)
         << (row.n == 6 ? std::to_string(row.brianchon_pass) : "-") << std::setw(10) << row.rejections
         << row.max_closure_residual << "\n";
    }
    os << "result: " << (summary.pass ? "PASS" : "FAIL") << "\n";
    text = os.str();
  } else {
    text = sweep_to_json(options, summary).dump(2) + "\n";
  }
  if (!write_output(options.out, text, out, err)) return kExitUsage;
  return summary.pass ? kExitPass : kExitCheckFailed;
}

int cmd_render(const RenderOptions& options, std::istream& in, std::ostream& out, std::ostream& err) {
  ChainConfiguration<Rational> config;
  try {
    config = load_config(options.input, options.scenario, in);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Chain<Rational> chain;
  try {
    chain = propagate(config);
  } catch (const GeometryError& e) {
    err << "error: " << error_json(e).dump() << "\n";
    return is_degeneracy(e.kind()) ? kExitDegenerate : kExitUsage;
  }

  std::optional<CenterPolygon<Rational>> polygon;
  std::optional<FocalConic<Rational>> conic;
  int status = kExitPass;
  try {
    polygon = center_polygon(chain);
    conic = verify_inscribed_conic(config.carrier_k.center, as_generalized(config.carrier_l), *polygon).conic;
  } catch (const GeometryError& e) {
    if (!options.force) {
      err << "error: verification failed: " << error_json(e).dump() << " (use --force to draw anyway)\n";
      return is_degeneracy(e.kind()) ? kExitDegenerate : kExitCheckFailed;
    }
    err << "warning: " << e.what() << "\n";
    status = kExitPass;
  }
  if (!write_output(options.out, render_svg(chain, polygon, conic), out, err)) return kExitUsage;
  return status;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chains of circles over two carriers and their inscribed focal conic"};
  app.name("chain_conic");
  app.require_subcommand(1);

  const std::map<std::string, CarrierSeparation> profiles{{"k-inside", CarrierSeparation::KInsideL},
                                                          {"k-outside", CarrierSeparation::KOutsideL},
                                                          {"l-line", CarrierSeparation::LIsLine}};
  const std::map<std::string, Backend> backends{{"exact", Backend::Exact}, {"float", Backend::Float}};
  const double tol_default = default_tolerance();

  GenerateOptions gen;
  std::size_t gen_n = 0;
  auto* generate = app.add_subcommand("generate", "Draw a random configuration (or a named scenario)");
  auto* gen_n_opt = generate->add_option("--n", gen_n, "Chain length (> 2)");
  generate->add_option("--seed", gen.seed, "64-bit seed");
  std::string gen_profile = "k-inside";
  generate->add_option("--profile", gen_profile, "Carrier placement")
      ->check(CLI::IsMember(profiles, CLI::ignore_case));
  generate->add_option("--grid-bound", gen.grid_bound, "Height bound B for p/q parameters (>= 8)")
      ->check(CLI::Range(std::int64_t{8}, std::int64_t{1} << 30));
  std::string gen_scenario;
  auto* gen_scenario_opt = generate->add_option("--scenario", gen_scenario, "fig2-ellipse | fig3-parabola | hyperbola");
  std::string gen_out;
  auto* gen_out_opt = generate->add_option("--out", gen_out, "Output file (default stdout)");
  gen_n_opt->excludes(gen_scenario_opt);

  VerifyOptions ver;
  ver.tolerance = tol_default;
  auto* verify = app.add_subcommand("verify", "Propagate a configuration and certify the theorems");
  verify->add_option("config", ver.input, "Configuration JSON ('-' for stdin)");
  std::string ver_scenario, ver_out;
  auto* ver_scenario_opt = verify->add_option("--scenario", ver_scenario, "Use a named scenario");
  std::string ver_backend = "exact";
  verify->add_option("--backend", ver_backend, "exact | float")
      ->check(CLI::IsMember(backends, CLI::ignore_case));
  verify->add_option("--tol", ver.tolerance, "Float tolerance (default 1e-9 or CHAIN_CONIC_TOL)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--pretty", ver.pretty, "Human-readable table instead of JSON");
  auto* ver_out_opt = verify->add_option("--out", ver_out, "Output file (default stdout)");

  SweepOptions sw;
  sw.tolerance = tol_default;
  auto* sweep = app.add_subcommand("sweep", "Verify many generated configurations");
  sweep->add_option("--n-list", sw.n_list, "Comma-separated chain lengths")->delimiter(',');
  sweep->add_option("--trials", sw.trials, "Trials per chain length");
  sweep->add_option("--seed0", sw.seed0, "Seed of trial 0 (trial k uses seed0 + k)");
  std::string sw_profile = "k-inside", sw_backend = "exact";
  sweep->add_option("--profile", sw_profile, "Carrier placement")
      ->check(CLI::IsMember(profiles, CLI::ignore_case));
  sweep->add_option("--backend", sw_backend, "exact | float")
      ->check(CLI::IsMember(backends, CLI::ignore_case));
  sweep->add_option("--tol", sw.tolerance, "Float tolerance")->check(CLI::PositiveNumber);
  sweep->add_option("--odd-threshold", sw.odd_threshold, "Required closure failure rate for odd n")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--jobs", sw.jobs, "Worker threads (0: all cores)");
  sweep->add_flag("--pretty", sw.pretty, "Human-readable table instead of JSON");
  std::string sw_out;
  auto* sw_out_opt = sweep->add_option("--out", sw_out, "Output file (default stdout)");

  RenderOptions ren;
  auto* render = app.add_subcommand("render", "Draw a verified chain and its conic as SVG");
  render->add_option("config", ren.input, "Configuration JSON ('-' for stdin)");
  std::string ren_scenario, ren_out;
  auto* ren_scenario_opt = render->add_option("--scenario", ren_scenario, "Use a named scenario");
  render->add_flag("--force", ren.force, "Draw even when verification fails");
  auto* ren_out_opt = render->add_option("--out", ren_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForAllHelp" ? app.help("", CLI::AppFormatMode::All) : app.help());
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*generate) {
    gen.profile = profiles.at(gen_profile);
    if (gen_n_opt->count() > 0) gen.n = gen_n;
    if (gen_scenario_opt->count() > 0) gen.scenario = gen_scenario;
    if (gen_out_opt->count() > 0) gen.out = gen_out;
    return cmd_generate(gen, out, err);
  }
  if (*verify) {
    ver.backend = backends.at(ver_backend);
    if (ver_scenario_opt->count() > 0) ver.scenario = ver_scenario;
    if (ver_out_opt->count() > 0) ver.out = ver_out;
    return cmd_verify(ver, in, out, err);
  }
  if (*sweep) {
    sw.profile = profiles.at(sw_profile);
    sw.backend = backends.at(sw_backend);
    if (sw_out_opt->count() > 0) sw.out = sw_out;
    return cmd_sweep(sw, out, err);
  }
  if (ren_scenario_opt->count() > 0) ren.scenario = ren_scenario;
  if (ren_out_opt->count() > 0) ren.out = ren_out;
  return cmd_render(ren, in, out, err);
}

}  // namespace chainconic::cli
