#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "output.hpp"
#include "rqc/correlations.hpp"
#include "rqc/dynamics.hpp"
#include "rqc/families.hpp"
#include "rqc/noise.hpp"
#include "rqc/oracle.hpp"
#include "rqc/state_io.hpp"

namespace rqc::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string state = "werner";
  double param = 1.0;
  std::string state_file;
  std::string noise = "rtn";
  std::string noise_file;
  double a_over_gamma = RtnNoise{}.a_over_gamma;
  double Gamma_over_gamma = MounNoise{}.Gamma_over_gamma;
  double lambda_over_gamma = MarkovNoise{}.lambda_over_gamma;
  double tmax = 3.0;
  int steps = 600;
  std::string param_grid = "0:1:200";
  std::string time_grid;
  std::string measure_a = "concurrence";
  std::string measure_b = "qs";
  int grid = 32;
  int refine = 4;
  std::string out;
  std::string format = "csv";
  double revival_threshold = 1e-4;
};

Grid parse_grid(const std::string& text, const char* flag) {
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ) {
    throw InvalidInput(std::string(flag) + " expects min:max:count");
  }
  try {
    std::size_t used = 0;
    Grid g{std::stod(a), std::stod(b), std::stoi(c, &used)};
    if (used != c.size()) throw std::invalid_argument("count");
    g.validate();
    return g;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(flag) + " expects min:max:count, got '" + text + "'");
  }
}

Grid time_grid(const Options& o) {
  if (!o.time_grid.empty()) return parse_grid(o.time_grid, "--time-grid");
  Grid g{0.0, o.tmax, o.steps};
  g.validate();
  return g;
}

NoiseModel noise_model(const Options& o) {
  if (!o.noise_file.empty()) {
    std::ifstream in(o.noise_file);
    if (!in) throw InvalidInput("cannot open noise file " + o.noise_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_noise(buf.str());
  }
  NoiseModel n;
  if (o.noise == "rtn") {
    n = RtnNoise{o.a_over_gamma};
  } else if (o.noise == "moun") {
    n = MounNoise{o.Gamma_over_gamma};
  } else {
    n = MarkovNoise{o.lambda_over_gamma};
  }
  validate_noise(n);
  return n;
}

StateInput state_input(const Options& o) {
  if (o.state == "file" || !o.state_file.empty()) {
    if (o.state_file.empty()) throw InvalidInput("--state file requires --state-file <path>");
    return read_state_file(o.state_file);
  }
  const auto fam = parse_family(o.state);
  if (!fam) throw InvalidInput("unknown state family '" + o.state + "'");
  return make_state({*fam, o.param});
}

Family family_only(const Options& o) {
  const auto fam = parse_family(o.state);
  if (!fam) throw InvalidInput("surface needs --state werner|mnms|mems");
  return *fam;
}

Measure measure_flag(const std::string& name, const char* flag) {
  const auto m = parse_measure(name);
  if (!m) throw InvalidInput(std::string(flag) + ": unknown measure '" + name + "'");
  return *m;
}

Table cmd_validate(const Options& o) {
  ValidationReport rep;
  try {
    const StateInput s = state_input(o);
    if (const auto* rho = std::get_if<DensityMatrix>(&s)) rep = validate_density(*rho);
  } catch (const InvalidState& e) {
    rep = e.report();
  }
  Table t{{"check", "value"}, {}};
  t.rows.push_back({std::string("valid"), rep.valid() ? 1.0 : 0.0});
  for (const auto& v : rep.violations) t.rows.push_back({v.constraint, v.magnitude});
  return t;
}

Table cmd_measures(const Options& o) {
  const XStateParams p = to_xstate(state_input(o));
  const MeasureSet m = measures(p);
  return {{"concurrence", "laqc", "qs", "cs"}, {{m.concurrence, m.laqc, m.qs, m.cs}}};
}

Table cmd_evolve(const Options& o) {
  const auto rows = trajectory(to_xstate(state_input(o)), noise_model(o), time_grid(o));
  Table t{{"t", "lambda", "concurrence", "laqc", "qs", "cs"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.t, r.lambda, r.concurrence, r.laqc, r.qs, r.cs});
  return t;
}

Table cmd_events(const Options& o) {
  const XStateParams p = to_xstate(state_input(o));
  const NoiseModel n = noise_model(o);
  const auto rows = trajectory(p, n, time_grid(o));
  EventOptions opt;
  opt.revival_threshold = o.revival_threshold;
  Table t{{"kind", "measure", "t", "value"}, {}};
  for (const auto& e : detect_events(p, n, rows, opt)) {
    t.rows.push_back({std::string(event_kind_name(e.kind)), std::string(measure_name(e.measure)),
                      e.t, e.value});
  }
  return t;
}

Table cmd_surface(const Options& o) {
  SweepSpec spec{family_only(o), parse_grid(o.param_grid, "--param-grid"), noise_model(o),
                 time_grid(o)};
  const auto pts = surface(spec, measure_flag(o.measure_a, "--measure-a"),
                           measure_flag(o.measure_b, "--measure-b"));
  Table t{{"param", "t", "value"}, {}};
  for (const auto& p : pts) t.rows.push_back({p.param, p.t, p.value});
  return t;
}

std::vector<Cell> oracle_row(const std::string& name, const OptimizationResult& r, double closed) {
  LocalMeasurement base;
  double pa = kNaN, pb = kNaN;
  if (const auto* c = std::get_if<ComplementarySetting>(&r.setting)) {
    base = c->base;
    pa = c->phase_a;
    pb = c->phase_b;
  } else {
    base = std::get<LocalMeasurement>(r.setting);
  }
  return {name, r.value, closed, base.theta_a, base.phi_a, base.theta_b, base.phi_b, pa, pb};
}

Table cmd_oracle(const Options& o) {
  const StateInput s = state_input(o);
  const DensityMatrix rho = to_density(s);
  MeasureSet closed{kNaN, kNaN, kNaN, kNaN};
  try {
    closed = measures(to_xstate(s));
  } catch (const InvalidInput&) {
    // General (non-X) input: no closed form to compare against.
  }
  Table t{{"measure", "oracle", "closed_form", "theta_a", "phi_a", "theta_b", "phi_b", "phase_a",
           "phase_b"},
          {}};
  t.rows.push_back(oracle_row("cs", optimize_cmi(rho, Extremum::Maximize, o.grid, o.refine), closed.cs));
  t.rows.push_back(oracle_row("qs", qs_oracle(rho, o.grid, o.refine), closed.qs));
  t.rows.push_back(oracle_row("laqc", laqc_oracle(rho, o.grid, o.refine), closed.laqc));
  return t;
}

Table cmd_crossover(const Options&) { return {{"z"}, {{crossover_z()}}}; }

void add_state_flags(CLI::App* sub, Options& o) {
  sub->add_option("--state", o.state, "werner|mnms|mems|file")
      ->check(CLI::IsMember({"werner", "mnms", "mems", "file"}));
  sub->add_option("--param", o.param, "family parameter in [0, 1]");
  sub->add_option("--state-file", o.state_file, "JSON state file (abcdrs | bloch | matrix)");
}

void add_noise_flags(CLI::App* sub, Options& o) {
  sub->add_option("--noise", o.noise, "rtn|moun|markov")->check(CLI::IsMember({"rtn", "moun", "markov"}));
  sub->add_option("--noise-file", o.noise_file, "JSON noise spec; overrides --noise");
  sub->add_option("--a-over-gamma", o.a_over_gamma, "RTN coupling a/gamma");
  sub->add_option("--Gamma-over-gamma", o.Gamma_over_gamma, "MOUN relaxation Gamma/gamma");
  sub->add_option("--lambda-over-gamma", o.lambda_over_gamma, "Markov decay lambda/gamma");
  sub->add_option("--tmax", o.tmax, "end of the gamma*t window");
  sub->add_option("--steps", o.steps, "number of time samples");
  sub->add_option("--time-grid", o.time_grid, "min:max:count; overrides --tmax/--steps");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "write to this path instead of stdout");
  sub->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Residual quantum correlations of two-qubit X states under dephasing noise", "rqc"};
  app.set_config("--config", "", "TOML/INI file mirroring the flags; flags take precedence");
  app.require_subcommand(1, 1);

  using Command = Table (*)(const Options&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_output_flags(sub, o);
    commands.emplace_back(sub, fn);
    return sub;
  };

  add_state_flags(add("validate", "check a state against the physical constraints", cmd_validate), o);
  add_state_flags(add("measures", "concurrence, LAQC, Qs and Cs of a state", cmd_measures), o);
  {
    CLI::App* sub = add("evolve", "trajectory of all measures under dephasing noise", cmd_evolve);
    add_state_flags(sub, o);
    add_noise_flags(sub, o);
  }
  {
    CLI::App* sub = add("events", "sudden-death and revival events", cmd_events);
    add_state_flags(sub, o);
    add_noise_flags(sub, o);
    sub->add_option("--revival-threshold", o.revival_threshold, "minimum reported revival peak");
  }
  {
    CLI::App* sub = add("surface", "measure difference over (param, t)", cmd_surface);
    add_state_flags(sub, o);
    add_noise_flags(sub, o);
    sub->add_option("--param-grid", o.param_grid, "min:max:count");
    sub->add_option("--measure-a", o.measure_a, "concurrence|laqc|qs|cs");
    sub->add_option("--measure-b", o.measure_b, "concurrence|laqc|qs|cs");
  }
  {
    CLI::App* sub = add("oracle", "brute-force measurement optimization vs closed forms", cmd_oracle);
    add_state_flags(sub, o);
    sub->add_option("--grid", o.grid, "coarse grid points per angle (>= 8)");
    sub->add_option("--refine", o.refine, "pattern-search refinement rounds");
  }
  add("crossover", "Werner parameter where LAQC equals concurrence", cmd_crossover);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      const Table t = fn(o);
      const Format f = o.format == "json" ? Format::Json : Format::Csv;
      if (o.out.empty()) {
        write_table(t, f, out);
      } else {
        std::ofstream file(o.out);
        if (!file) throw InvalidInput("cannot open output file " + o.out);
        write_table(t, f, file);
      }
      if (sub->get_name() == "validate" && std::get<double>(t.rows.front()[1]) == 0.0) return 1;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace rqc::cli
