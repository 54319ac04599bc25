#include "dsem/cli.hpp"

#include "dsem/modes.hpp"
#include "dsem/report.hpp"
#include "dsem/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dsem {

namespace {

struct RunConfig {
  std::string j = "1";
  std::string n = "0";
  int m = 0;
  std::string parity;
  std::string t_range, r_range, theta_range, phi_range;
  int n_t = -1, n_r = -1, n_theta = -1, n_phi = -1;
  double fd_step = -1;
  double unit_scale = 1.0;
  std::string format = "json";
  std::string out_path;
  std::optional<double> tolerance;
  std::string amplitude = "1";
  std::string gauge = "landau";
  std::string gauge_amplitude = "1";
  std::optional<int> omega_g;
  std::string suite = "all";
  int n_random = 50;
  std::uint64_t seed = 20240607;
};

// Usage errors detected after parsing; mapped to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GridSpec grid_from(const RunConfig& cfg, GridSpec g = {}) {
  if (!cfg.t_range.empty()) g.t_range = parse_real_range(cfg.t_range);
  if (!cfg.r_range.empty()) g.r_range = parse_real_range(cfg.r_range);
  if (!cfg.theta_range.empty()) g.theta_range = parse_real_range(cfg.theta_range);
  if (!cfg.phi_range.empty()) g.phi_range = parse_real_range(cfg.phi_range);
  if (cfg.n_t >= 0) g.n_t = cfg.n_t;
  if (cfg.n_r >= 0) g.n_r = cfg.n_r;
  if (cfg.n_theta >= 0) g.n_theta = cfg.n_theta;
  if (cfg.n_phi >= 0) g.n_phi = cfg.n_phi;
  if (cfg.fd_step >= 0) g.fd_step = cfg.fd_step;
  return g;
}

std::vector<Parity> parities_from(const RunConfig& cfg, Parity fallback, bool allow_both) {
  if (!cfg.parity.empty()) return {parse_parity(cfg.parity)};
  if (allow_both) return {Parity::Magnetic, Parity::Electric};
  return {fallback};
}

Gauge parse_gauge(const std::string& s) {
  if (s == "landau") return Gauge::Landau;
  if (s == "lorentz") return Gauge::Lorentz;
  if (s == "gradient") return Gauge::Gradient;
  throw UsageError("unknown gauge '" + s + "' (landau, lorentz, gradient)");
}

PotentialSet potentials_for(const ModeIndex& mode, const RunConfig& cfg) {
  switch (parse_gauge(cfg.gauge)) {
    case Gauge::Landau: return electric_potentials_landau(mode);
    case Gauge::Lorentz: return electric_potentials_lorentz(mode, parse_complex(cfg.gauge_amplitude));
    case Gauge::Gradient: return gradient_solution(mode, cfg.omega_g.value_or(mode.omega()));
  }
  throw UsageError("unknown gauge");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
  f << text;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw UsageError("--format must be json or csv");
}

std::string render(const RunConfig& cfg, const Table& t) {
  return cfg.format == "csv" ? to_csv(t) : to_json(t);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.unit_scale > 0)) throw UsageError("--unit-scale must be positive");
  const IntRange js = parse_int_range(cfg.j);
  const IntRange ns = parse_int_range(cfg.n);
  Table t;
  t.kind = "spectrum";
  t.real_columns = {"j", "n", "omega", "omega_scaled"};
  t.metadata = {{"unit_scale", format_double(cfg.unit_scale)}};
  for (int j = js.lo; j <= js.hi; ++j)
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const int w = spectrum(j, n);
      t.rows.push_back({{double(j), double(n), double(w), w * cfg.unit_scale}, {}});
    }
  emit(cfg, render(cfg, t), out);
  return kExitPass;
}

int cmd_radial(const RunConfig& cfg, std::ostream& out) {
  const IntRange js = parse_int_range(cfg.j);
  const IntRange ns = parse_int_range(cfg.n);
  const GridSpec g = grid_from(cfg);
  g.validate();
  const auto amp = parse_complex(cfg.amplitude);
  Table t;
  t.kind = "radial";
  t.real_columns = {"j", "n", "omega", "r"};
  t.complex_columns = {"R", "dR"};
  for (int j = js.lo; j <= js.hi; ++j)
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const RadialSolution R(ModeIndex::make(j, 0, n, Parity::Magnetic));
      for (double r : g.r_values())
        t.rows.push_back({{double(j), double(n), double(R.mode().omega()), r},
                          {amp * R.value(r), amp * R.derivative(r)}});
    }
  emit(cfg, render(cfg, t), out);
  return kExitPass;
}

ModeIndex single_mode(const RunConfig& cfg, Parity parity) {
  const IntRange js = parse_int_range(cfg.j);
  const IntRange ns = parse_int_range(cfg.n);
  if (js.lo != js.hi || ns.lo != ns.hi) throw UsageError("this command takes a single j and n");
  return ModeIndex::make(js.lo, cfg.m, ns.lo, parity);
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  const ModeIndex mode = single_mode(cfg, parities_from(cfg, Parity::Magnetic, false)[0]);
  std::optional<PotentialSet> pot;
  if (mode.parity() == Parity::Electric) pot = potentials_for(mode, cfg);
  GridSpec defaults;
  defaults.n_t = defaults.n_r = 3;
  const GridSpec g = grid_from(cfg, defaults);
  g.validate();
  const auto amp = parse_complex(cfg.amplitude);
  const ScalarTriple triple(mode);

  Table t;
  t.kind = "field";
  t.real_columns = {"t", "r", "theta", "phi"};
  for (int k = 0; k < 4; ++k) t.complex_columns.push_back("psi" + std::to_string(k));
  for (int k = 1; k <= 10; ++k) t.complex_columns.push_back("f" + std::to_string(k));
  t.metadata = {{"j", std::to_string(mode.j())},
                {"m", std::to_string(mode.m())},
                {"n", std::to_string(mode.n())},
                {"parity", to_string(mode.parity())},
                {"omega", std::to_string(mode.omega())}};
  if (pot) t.metadata.emplace_back("gauge", to_string(pot->gauge()));

  for (double tt : g.t_values())
    for (double r : g.r_values())
      for (double th : g.theta_values())
        for (double ph : g.phi_values()) {
          const SpacetimePoint p{tt, r, th, ph};
          const auto mo = mo_field(triple, p);
          const auto dkp = dkp_field(triple, p, pot ? &*pot : nullptr);
          Table::Row row{{tt, r, th, ph}, {}};
          for (int k = 0; k < 4; ++k) row.values.push_back(amp * mo.psi[k]);
          for (int k = 0; k < 10; ++k) row.values.push_back(amp * dkp.f[k]);
          t.rows.push_back(std::move(row));
        }
  emit(cfg, render(cfg, t), out);
  return kExitPass;
}

int cmd_potentials(const RunConfig& cfg, std::ostream& out) {
  const Parity parity = parities_from(cfg, Parity::Electric, false)[0];
  if (parity != Parity::Electric)
    throw UsageError("potentials exist for electric parity only");
  const ModeIndex mode = single_mode(cfg, parity);
  const PotentialSet pot = potentials_for(mode, cfg);
  const GridSpec g = grid_from(cfg);
  g.validate();
  const auto amp = parse_complex(cfg.amplitude);
  Table t;
  t.kind = "potentials";
  t.real_columns = {"t", "r"};
  t.complex_columns = {"g1", "g2", "g3"};
  t.metadata = {{"gauge", to_string(pot.gauge())}, {"omega", std::to_string(mode.omega())}};
  for (double tt : g.t_values())
    for (double r : g.r_values()) {
      const auto gg = pot.at(conformal_time(tt), r);
      t.rows.push_back({{tt, r}, {amp * gg[0], amp * gg[1], amp * gg[2]}});
    }
  emit(cfg, render(cfg, t), out);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& s = cfg.suite;
  if (s != "mo" && s != "dkp" && s != "maxwell" && s != "gauge" && s != "all")
    throw UsageError("--suite must be one of mo, dkp, maxwell, gauge, all");
  const bool want_gauge = s == "gauge" || s == "all";
  const auto parities = parities_from(cfg, Parity::Electric, true);
  if (s == "gauge" && parities.size() == 1 && parities[0] == Parity::Magnetic)
    throw UsageError("gauge suites are electric-parity only: gradient solutions cannot have "
                     "parity (-1)^(j+1)");
  if (cfg.tolerance && !(*cfg.tolerance > 0)) throw UsageError("--tol must be positive");
  if (cfg.n_random < 1) throw UsageError("--points must be positive");

  const IntRange js = parse_int_range(cfg.j);
  const IntRange ns = parse_int_range(cfg.n);
  const GridSpec g = grid_from(cfg);
  g.validate();
  SuiteOptions opts;
  opts.tolerance = cfg.tolerance;
  const auto points = random_interior_points(g, cfg.n_random, cfg.seed);

  std::vector<SuiteResult> results;
  for (int j = js.lo; j <= js.hi; ++j)
    for (int n = ns.lo; n <= ns.hi; ++n)
      for (Parity parity : parities) {
        const ModeIndex mode = ModeIndex::make(j, cfg.m, n, parity);
        if (s == "mo" || s == "all") {
          auto reps = residual_mo_reduced(mode, g, opts);
          reps.push_back(residual_wave_G(mode, g, opts));
          reps.push_back(residual_radial(mode, 200, g.fd_step,
                                         cfg.tolerance.value_or(kDefaultRadialRelTolerance)));
          results.push_back({"mo", mode, std::move(reps)});
        }
        if (s == "dkp" || s == "all") results.push_back({"dkp", mode, residual_dkp(mode, g, nullptr, opts)});
        if (s == "maxwell" || s == "all")
          results.push_back({"maxwell", mode,
                             {residual_full_maxwell(mode, points, g.fd_step,
                                                    cfg.tolerance.value_or(kDefaultMaxwellTolerance))}});
        if (want_gauge && parity == Parity::Electric) {
          std::vector<ResidualReport> reps;
          auto append = [&](std::vector<ResidualReport> more) {
            for (auto& r : more) reps.push_back(std::move(r));
          };
          const auto landau = electric_potentials_landau(mode);
          const auto lorentz = electric_potentials_lorentz(mode, parse_complex(cfg.gauge_amplitude));
          const auto gradient = gradient_solution(mode, cfg.omega_g.value_or(mode.omega()));
          append(residual_potential_equations(landau, g, opts));
          append(residual_potential_equations(lorentz, g, opts));
          append(residual_dkp(mode, g, &lorentz, opts));
          reps.push_back(residual_lorentz(lorentz, g, opts));
          reps.push_back(residual_conformal_kfg(lorentz, g, opts));
          append(residual_potential_equations(gradient, g, opts));
          reps.push_back(residual_lorentz(gradient, g, opts));
          reps.push_back(residual_conformal_kfg(gradient, g, opts));
          results.push_back({"gauge", mode, std::move(reps)});
        }
      }

  if (cfg.format == "csv")
    emit(cfg, verify_to_csv(results), out);
  else
    emit(cfg, verify_to_json(results, g), out);

  int failed = 0;
  for (const auto& r : results) failed += r.pass() ? 0 : 1;
  err << "verify: " << results.size() << " suite runs, " << failed << " failed\n";
  return failed == 0 ? kExitPass : kExitResidualFailure;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidQuantumNumbers:
    case ErrorKind::WrongParity:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

IntRange parse_int_range(const std::string& s) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer range '" + s + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad integer range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(s);
  } else {
    r.lo = to_int(s.substr(0, dots));
    r.hi = to_int(s.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty integer range '" + s + "'");
  return r;
}

std::array<double, 2> parse_real_range(const std::string& s) {
  auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad real range '" + s + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad real range '" + s + "'");
    return v;
  };
  std::size_t pos = s.find("..");
  std::size_t skip = 2;
  if (pos == std::string::npos) {
    pos = s.find(',');
    skip = 1;
  }
  if (pos == std::string::npos) throw std::invalid_argument("real range needs 'a..b' or 'a,b'");
  return {to_double(s.substr(0, pos)), to_double(s.substr(pos + skip))};
}

std::complex<double> parse_complex(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad complex number '" + s + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad complex number '" + s + "'");
    return v;
  };
  const auto comma = body.find(',');
  if (comma == std::string::npos) return {to_double(body), 0.0};
  return {to_double(body.substr(0, comma)), to_double(body.substr(comma + 1))};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact electromagnetic modes on non-static de Sitter space", "dsem"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_mode = [&](CLI::App* sub, bool ranges) {
    sub->add_option("--j", cfg.j, ranges ? "j or range a..b (j >= 1)" : "angular momentum j >= 1");
    sub->add_option("--n", cfg.n, ranges ? "n or range a..b" : "radial number n >= 0");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--t-range", cfg.t_range, "t range, a..b");
    sub->add_option("--r-range", cfg.r_range, "r range inside (0, pi), a..b");
    sub->add_option("--theta-range", cfg.theta_range, "theta range inside (0, pi), a..b");
    sub->add_option("--phi-range", cfg.phi_range, "phi range, a..b");
    sub->add_option("--nt", cfg.n_t, "t points");
    sub->add_option("--nr", cfg.n_r, "r points");
    sub->add_option("--ntheta", cfg.n_theta, "theta points");
    sub->add_option("--nphi", cfg.n_phi, "phi points");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--out", cfg.out_path, "write to file instead of stdout");
  };
  auto add_gauge = [&](CLI::App* sub) {
    sub->add_option("--gauge", cfg.gauge, "landau, lorentz or gradient");
    sub->add_option("--gauge-amplitude", cfg.gauge_amplitude,
                    "Lorentz-gauge homogeneous amplitude, x or x,y");
    sub->add_option("--omega-g", cfg.omega_g, "gradient-solution frequency (>= j+1)");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "frequencies omega = n + 1 + j");
  add_mode(spectrum_cmd, true);
  spectrum_cmd->add_option("--unit-scale", cfg.unit_scale, "c/rho multiplier for omega");
  add_output(spectrum_cmd);

  auto* radial_cmd = app.add_subcommand("radial", "radial solution R(r) and R'(r)");
  add_mode(radial_cmd, true);
  radial_cmd->add_option("--r-range", cfg.r_range, "r range inside (0, pi), a..b");
  radial_cmd->add_option("--nr", cfg.n_r, "r points");
  radial_cmd->add_option("--amplitude", cfg.amplitude, "complex multiplier, x or x,y");
  add_output(radial_cmd);

  auto* field_cmd = app.add_subcommand("field", "sample the MO and DKP fields on a grid");
  add_mode(field_cmd, false);
  field_cmd->add_option("--m", cfg.m, "magnetic number, |m| <= j");
  field_cmd->add_option("--parity", cfg.parity, "magnetic or electric");
  add_grid(field_cmd);
  field_cmd->add_option("--amplitude", cfg.amplitude, "complex multiplier, x or x,y");
  add_gauge(field_cmd);
  add_output(field_cmd);

  auto* pot_cmd = app.add_subcommand("potentials", "electric-parity potentials g1, g2, g3");
  add_mode(pot_cmd, false);
  pot_cmd->add_option("--parity", cfg.parity, "electric (magnetic is rejected)");
  pot_cmd->add_option("--t-range", cfg.t_range, "t range, a..b");
  pot_cmd->add_option("--r-range", cfg.r_range, "r range inside (0, pi), a..b");
  pot_cmd->add_option("--nt", cfg.n_t, "t points");
  pot_cmd->add_option("--nr", cfg.n_r, "r points");
  pot_cmd->add_option("--amplitude", cfg.amplitude, "complex multiplier, x or x,y");
  add_gauge(pot_cmd);
  add_output(pot_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "residual verification suites");
  add_mode(verify_cmd, true);
  verify_cmd->add_option("--m", cfg.m, "magnetic number for the 4D check");
  verify_cmd->add_option("--parity", cfg.parity, "magnetic or electric (default: both)");
  verify_cmd->add_option("--suite", cfg.suite, "mo, dkp, maxwell, gauge or all");
  add_grid(verify_cmd);
  verify_cmd->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  verify_cmd->add_option("--tol", cfg.tolerance, "override every suite tolerance");
  verify_cmd->add_option("--points", cfg.n_random, "random points for the 4D check");
  verify_cmd->add_option("--seed", cfg.seed, "seed for the random points");
  verify_cmd->add_option("--gauge-amplitude", cfg.gauge_amplitude,
                         "Lorentz-gauge homogeneous amplitude, x or x,y");
  verify_cmd->add_option("--omega-g", cfg.omega_g, "gradient-solution frequency (>= j+1)");
  add_output(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    check_format(cfg);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg, out);
    if (radial_cmd->parsed()) return cmd_radial(cfg, out);
    if (field_cmd->parsed()) return cmd_field(cfg, out);
    if (pot_cmd->parsed()) return cmd_potentials(cfg, out);
    return cmd_verify(cfg, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dsem
