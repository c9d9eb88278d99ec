#include "commands.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "shg/shg.hpp"
#include "validation.hpp"

namespace shg::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

io::Format file_format(const fs::path& p) {
  return p.extension() == ".json" ? io::Format::json : io::Format::csv;
}

struct Output {
  fs::path dir;
  io::Format format;

  fs::path file(const std::string& stem) const { return dir / (stem + io::extension(format)); }
};

Output prepare_output(const RunConfig& config) {
  Output o{config.out_dir, io::parse_format(config.format)};
  fs::create_directories(o.dir);
  return o;
}

std::optional<PulsePair> load_init_file(const RunConfig& config) {
  if (config.init_file.empty()) return std::nullopt;
  const fs::path p(config.init_file);
  if (!fs::exists(p)) throw InvalidInput("init file not found: " + config.init_file);
  return io::read_profile(p, file_format(p));
}

InitSpec init_spec(const RunConfig& config, const std::optional<PulsePair>& loaded) {
  InitSpec spec;
  spec.seed = config.seed;
  if (loaded) {
    spec.kind = InitKind::custom;
    spec.custom = *loaded;
    return spec;
  }
  try {
    spec.kind = parse_init_kind(config.init);
  } catch (const std::exception&) {
    throw InvalidConfiguration("unknown --init '" + config.init + "'");
  }
  if (spec.kind == InitKind::custom) throw InvalidConfiguration("--init custom needs --init-file");
  return spec;
}

double safe_decay(const RealField& u) {
  try {
    return fit_decay_rate(u).rate;
  } catch (const FitWindowError&) {
    return kNaN;
  }
}

io::Summary summarize(const PulsePair& solution, double m, double kappa, double residual,
                      long iterations, std::uint64_t seed) {
  io::Summary s;
  s.m_lambda = m;
  s.kappa = kappa;
  s.residual = residual;
  s.iterations = iterations;
  s.decay_rate_phi = safe_decay(solution.f);
  s.decay_rate_psi = safe_decay(solution.g);
  s.seed = seed;
  return s;
}

void print_summary(std::ostream& out, const io::Summary& s, const Output& o) {
  out << std::setprecision(10) << "m_lambda   " << s.m_lambda << "\n"
      << "kappa      " << s.kappa << "\n"
      << "residual   " << std::setprecision(3) << s.residual << "\n"
      << "iterations " << s.iterations << "\n"
      << "decay      phi " << std::setprecision(6) << s.decay_rate_phi << ", psi "
      << s.decay_rate_psi << "\n";
  for (const auto& [key, value] : s.extra) {
    out << std::left << std::setw(11) << key << std::setprecision(15) << value << "\n";
  }
  out << "written to " << o.dir.string() << "\n";
}

Grid effective_grid(const RunConfig& config, const std::optional<PulsePair>& loaded) {
  return loaded ? loaded->grid() : config.grid();
}

}  // namespace

Params RunConfig::params() const {
  auto resolve = [](std::optional<double> reduced, std::optional<double> physical, double shift,
                    const char* rname, const char* pname) {
    if (reduced && physical) {
      if (std::abs(*reduced - (*physical + shift)) > 1e-12 * std::max(1.0, std::abs(*reduced))) {
        throw InvalidParameter(std::string(rname) + " and " + pname + " are inconsistent");
      }
      return *physical;
    }
    if (physical) return *physical;
    return reduced.value_or(1.0) - shift;
  };
  if (!(mu > 0.0)) throw InvalidParameter("mu must be positive");
  const double a = resolve(alpha0, alpha, sigma, "alpha0", "alpha (alpha0 = alpha + sigma)");
  const double b =
      resolve(beta0, beta, 2.0 * mu * sigma, "beta0", "beta (beta0 = beta + 2 mu sigma)");
  Params p = Params::physical(a, b, mu, sigma, lambda);
  p.validate();
  return p;
}

Grid RunConfig::grid() const { return Grid::make(half_length, n_points); }

int cmd_solve(const RunConfig& config, std::ostream& out) {
  const Params params = config.params();
  const auto loaded = load_init_file(config);
  const Grid grid = effective_grid(config, loaded);

  SolverConfig sc;
  if (config.tol) sc.tol_residual = *config.tol;
  if (config.max_iter) sc.max_iter = *config.max_iter;
  sc.step_size = config.step_size;
  sc.max_step = config.max_step;
  if (config.preconditioner == "none") {
    sc.preconditioner = Preconditioner::none;
  } else if (config.preconditioner != "helmholtz") {
    throw InvalidConfiguration("unknown --preconditioner '" + config.preconditioner + "'");
  }
  sc.init = init_spec(config, loaded);
  sc.validate();
  const Output o = prepare_output(config);

  std::optional<GroundState> result;
  try {
    result = minimize(params, grid, sc);
  } catch (const ConvergenceFailure& e) {
    io::write_table(o.file("trace"), io::trace_table(e.trace()), o.format);
    out << "solve failed: " << e.what() << "\n";
    return kFailure;
  }
  const GroundState& gs = *result;
  const PulsePair solution = rescale_to_solution(gs);
  io::write_profile(o.file("profile"), gs.pair, o.format);
  io::write_profile(o.file("solution"), solution, o.format);
  io::write_table(o.file("trace"), io::trace_table(gs.trace), o.format);
  const io::Summary s =
      summarize(solution, gs.m_lambda, gs.kappa, gs.residual, gs.iterations, config.seed);
  io::write_summary(o.dir / "summary.json", s);
  print_summary(out, s, o);
  return kOk;
}

int cmd_petviashvili(const RunConfig& config, std::ostream& out) {
  const Params params = config.params();
  const auto loaded = load_init_file(config);
  const Grid grid = effective_grid(config, loaded);

  FixedPointConfig fc;
  if (config.tol) fc.tol = *config.tol;
  if (config.max_iter) fc.max_iter = *config.max_iter;
  fc.gamma = config.gamma;
  fc.relaxation = config.relaxation;
  fc.init = init_spec(config, loaded);
  fc.validate();
  const Output o = prepare_output(config);

  std::optional<FixedPointResult> result;
  try {
    result = fixed_point_solve(params, grid, fc);
  } catch (const ConvergenceFailure& e) {
    io::write_table(o.file("trace"), io::trace_table(e.trace()), o.format);
    out << "petviashvili failed: " << e.what() << "\n";
    return kFailure;
  }
  const FixedPointResult& r = *result;
  // The iterate solves the stationary system with kappa = 1; its own
  // constraint value is the lambda it minimizes for.
  const double m = energy(r.pair, params);
  io::write_profile(o.file("profile"), r.pair, o.format);
  io::write_table(o.file("trace"), io::trace_table(r.trace), o.format);
  io::Summary s = summarize(r.pair, m, lagrange_multiplier(m, constraint(r.pair)),
                            el_residual(r.pair, 1.0, params), r.iterations, config.seed);
  s.extra.emplace_back("stabilization", r.stabilization);
  io::write_summary(o.dir / "summary.json", s);
  print_summary(out, s, o);
  return kOk;
}

int cmd_evolve(const RunConfig& config, std::ostream& out) {
  const Params params = config.params();
  const auto loaded = load_init_file(config);
  const Grid grid = effective_grid(config, loaded);

  EvolveConfig ec;
  ec.dt = config.dt;
  ec.t_end = config.t_end;
  ec.record_every = config.record_every;
  ec.init_noise = config.noise;
  ec.seed = config.seed;
  ec.validate();

  PulsePair ground(grid);
  if (loaded) {
    ground = *loaded;
  } else if (config.init != "zero") {
    FixedPointConfig fc;
    if (config.tol) fc.tol = *config.tol;
    if (config.max_iter) fc.max_iter = *config.max_iter;
    fc.init.kind = parse_init_kind(config.init);
    fc.init.seed = config.seed;
    ground = fixed_point_solve(params, grid, fc).pair;
  }
  const Output o = prepare_output(config);

  const TravellingWaveReport r = verify_travelling_wave(ground, params, ec);
  io::write_table(o.file("series"), io::series_table(r.series), o.format);
  io::write_report(o.dir / "report.json",
                   {{"max_amp_drift_W", r.max_amp_drift_w},
                    {"max_amp_drift_V", r.max_amp_drift_v},
                    {"phase_rate_W", r.phase_rate_w},
                    {"phase_rate_V", r.phase_rate_v},
                    {"expected_rate_W", r.expected_rate_w},
                    {"expected_rate_V", r.expected_rate_v},
                    {"charge_drift", r.charge_drift},
                    {"hamiltonian_drift", r.hamiltonian_drift},
                    {"dt", r.dt},
                    {"steps", static_cast<double>(r.steps)},
                    {"seed", static_cast<double>(config.seed)}});
  out << std::setprecision(6) << "amp drift  W " << r.max_amp_drift_w << ", V "
      << r.max_amp_drift_v << "\n"
      << "phase rate W " << std::setprecision(9) << r.phase_rate_w << " (expected "
      << r.expected_rate_w << "), V " << r.phase_rate_v << " (expected " << r.expected_rate_v
      << ")\n"
      << std::setprecision(3) << "Q drift " << r.charge_drift << ", H drift "
      << r.hamiltonian_drift << "\n";

  if (config.order_check) {
    const WaveState initial(to_complex(ground.f), to_complex(ground.g));
    const SplittingOrder so = measure_splitting_order(initial, params, config.dt, config.t_end);
    io::write_report(o.dir / "order.json", {{"dt", config.dt},
                                            {"error_dt", so.error_coarse},
                                            {"error_dt_half", so.error_fine},
                                            {"order_factor", so.ratio},
                                            {"order", std::log2(so.ratio)}});
    out << "order factor " << std::setprecision(6) << so.ratio << " (order "
        << std::log2(so.ratio) << ")\n";
  }
  out << "written to " << o.dir.string() << "\n";
  return kOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  validation::Options opts;
  if (config.length_given) opts.half_length = config.half_length;
  if (config.points_given) opts.n_points = config.n_points;
  opts.only = config.only;
  const auto results = validation::run_checks(opts, &out);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? kOk : kFailure;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  if (config.lambdas.empty()) throw InvalidConfiguration("--lambdas is empty");
  const Output o = prepare_output(config);
  io::Table table{{"lambda", "m_lambda", "kappa", "normalized", "residual", "iterations"},
                  std::vector<std::vector<double>>(6)};
  int status = kOk;
  for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
    RunConfig run = config;
    run.lambda = config.lambdas[i];
    run.out_dir = config.out_dir / ("lambda_" + std::to_string(i));
    std::ostringstream sink;
    if (cmd_solve(run, sink) != kOk) {
      out << "lambda " << run.lambda << ": " << sink.str();
      status = kFailure;
      continue;
    }
    const io::Summary s = io::read_summary(run.out_dir / "summary.json");
    const double normalized = s.m_lambda * std::pow(run.lambda, -2.0 / 3.0);
    const double row[] = {run.lambda, s.m_lambda, s.kappa, normalized, s.residual,
                          static_cast<double>(s.iterations)};
    for (std::size_t c = 0; c < 6; ++c) table.columns[c].push_back(row[c]);
    out << "lambda " << std::setw(8) << run.lambda << "  m " << std::setprecision(10)
        << s.m_lambda << "  m*lambda^(-2/3) " << normalized << "\n";
  }
  io::write_table(o.file("sweep"), table, o.format);
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solitary pulses of the SHG system: ground states, fixed points and dynamics",
               "shgpulse"};
  app.set_config("--config", "", "TOML/INI file with flag values; flags on the command line win");
  app.require_subcommand(1);

  RunConfig cfg;
  double alpha0 = 0, beta0 = 0, alpha = 0, beta = 0, tol = 0;
  int max_iter = 0;
  auto* o_alpha0 = app.add_option("--alpha0", alpha0, "stationary coefficient of phi");
  auto* o_beta0 = app.add_option("--beta0", beta0, "stationary coefficient of psi");
  auto* o_alpha = app.add_option("--alpha", alpha, "evolution coefficient of W");
  auto* o_beta = app.add_option("--beta", beta, "evolution coefficient of V");
  app.add_option("--mu", cfg.mu, "dispersion ratio")->capture_default_str();
  app.add_option("--sigma", cfg.sigma, "travelling-wave frequency")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "constraint value int f^2 g")->capture_default_str();
  auto* o_L = app.add_option("--L", cfg.half_length, "half length of [-L, L)")->capture_default_str();
  auto* o_N = app.add_option("--N", cfg.n_points, "grid points (even)")->capture_default_str();
  auto* o_tol = app.add_option("--tol", tol, "solver tolerance");
  auto* o_max_iter = app.add_option("--max-iter", max_iter, "iteration cap");
  app.add_option("--init", cfg.init, "gaussian | explicit | random (evolve: also zero)")
      ->capture_default_str();
  app.add_option("--init-file", cfg.init_file, "profile file to start from");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  app.add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* solve = app.add_subcommand("solve", "constrained minimization");
  solve->add_option("--step-size", cfg.step_size)->capture_default_str();
  solve->add_option("--max-step", cfg.max_step)->capture_default_str();
  solve->add_option("--preconditioner", cfg.preconditioner, "helmholtz | none")
      ->capture_default_str();

  auto* petv = app.add_subcommand("petviashvili", "stabilized fixed-point iteration");
  petv->add_option("--gamma", cfg.gamma, "stabilization exponent in (1, 3)")->capture_default_str();
  petv->add_option("--relaxation", cfg.relaxation, "weight of the new iterate in (0, 1]")
      ->capture_default_str();

  auto* evolve = app.add_subcommand("evolve", "split-step evolution of a travelling pulse");
  evolve->add_option("--dt", cfg.dt)->capture_default_str();
  evolve->add_option("--t-end", cfg.t_end)->capture_default_str();
  evolve->add_option("--record-every", cfg.record_every)->capture_default_str();
  evolve->add_option("--noise", cfg.noise, "relative noise on the initial data")
      ->capture_default_str();
  evolve->add_flag("--order-check", cfg.order_check, "also measure the splitting order");

  auto* validate = app.add_subcommand("validate", "run the acceptance checks");
  validate->add_option("--only", cfg.only, "check names")
      ->delimiter(',')
      ->check(CLI::IsMember(validation::check_names()));

  auto* sweep = app.add_subcommand("sweep", "minimize over several lambda values");
  sweep->add_option("--lambdas", cfg.lambdas)->delimiter(',')->capture_default_str();

  for (auto* sub : {solve, petv, evolve, validate, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (o_alpha0->count()) cfg.alpha0 = alpha0;
  if (o_beta0->count()) cfg.beta0 = beta0;
  if (o_alpha->count()) cfg.alpha = alpha;
  if (o_beta->count()) cfg.beta = beta;
  if (o_tol->count()) cfg.tol = tol;
  if (o_max_iter->count()) cfg.max_iter = max_iter;
  cfg.length_given = o_L->count() > 0;
  cfg.points_given = o_N->count() > 0;

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (petv->parsed()) return cmd_petviashvili(cfg, out);
    if (evolve->parsed()) return cmd_evolve(cfg, out);
    if (validate->parsed()) return cmd_validate(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidConfiguration& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GridMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"shgpulse"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace shg::cli
