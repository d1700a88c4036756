#include "scmc/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scmc/io.hpp"
#include "scmc/mesh.hpp"
#include "scmc/rotational.hpp"
#include "scmc/whitham.hpp"

namespace scmc {

namespace {

struct RunConfig {
  std::string data, potential, out, out_dir = ".", log;
  double tol = 1e-9;
  double dt = 1e-3;
  int steps = 100;
  int resolution = 64;
  // rot-gen
  int genus = 0;
  double H = 0.0, alpha = 3.0;
  bool non_embedded = false;
  // flow
  std::string strategy = "shrink";
  int sign = 1;
  std::vector<double> beta{1.0, 0.0};
  double direction = 1.0;
  std::vector<double> rates;
  // surface
  double y_extent = 1.0;
  int substeps = 4;
  // isospectral
  int iso_direction = 0;
  // period
  std::vector<double> guess;
};

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") std::cout << text;
  else write_file(c.out, text);
}

int cmd_validate(const RunConfig& c) {
  SpectralData d = parse_spectral_data(read_file(c.data));
  ConditionReport r = check_conditions(d, c.tol);
  json j = to_json(r);
  j["tol"] = c.tol;
  emit(c, j.dump(2) + "\n");
  return r.all_pass() ? 0 : 3;
}

int cmd_rot_gen(const RunConfig& c) {
  SpectralData d;
  if (c.genus == 0) d = rot::genus0(c.H, c.non_embedded);
  else if (c.genus == 1) d = rot::genus1(c.H, c.alpha);
  else throw DomainError("rotational families exist for genus 0 and 1");
  emit(c, serialize(d));
  return 0;
}

whitham::StrategySpec strategy_spec(const RunConfig& c) {
  whitham::StrategySpec s;
  if (c.strategy == "shrink") s.kind = whitham::StrategySpec::ShrinkShortArc;
  else if (c.strategy == "separate") s.kind = whitham::StrategySpec::SeparateDoubleRootOfB;
  else if (c.strategy == "move-root") s.kind = whitham::StrategySpec::MoveCircleRoot;
  else if (c.strategy == "track") s.kind = whitham::StrategySpec::TrackTargets;
  else throw ParseError("--strategy: unknown strategy " + c.strategy);
  s.sign = c.sign;
  if (c.beta.size() != 2) throw ParseError("--beta: expected two numbers");
  s.beta = {c.beta[0], c.beta[1]};
  s.direction = c.direction;
  if (s.kind == whitham::StrategySpec::TrackTargets) {
    if (c.rates.size() % 2 != 0) throw ParseError("--rates: expected re im pairs");
    std::vector<cplx> r;
    for (size_t k = 0; k + 1 < c.rates.size(); k += 2) r.emplace_back(c.rates[k], c.rates[k + 1]);
    s.curves = [r](double, const std::vector<cplx>& roots) {
      std::vector<cplx> out(roots.size(), 0.0);
      for (size_t k = 0; k < std::min(r.size(), out.size()); ++k) out[k] = r[k];
      return out;
    };
  }
  return s;
}

void log_header(std::ostream& os, const SpectralData& d) {
  os << "t";
  for (int k = 0; k <= 2 * d.g; ++k) os << ",a" << k << "_re,a" << k << "_im";
  for (int k = 0; k <= d.g + 1; ++k) os << ",b" << k << "_re,b" << k << "_im";
  os << ",lambda1_re,lambda1_im,short_arc,min_root_a_distance,min_b_to_a,min_b_to_sym,delta_pm2_distance,events\n";
}

void log_row(std::ostream& os, const whitham::FlowState& s, size_t first_event) {
  const SpectralData& d = s.data;
  whitham::Diagnostics dg = whitham::monitors(s);
  os << format_double(s.t);
  for (int k = 0; k <= 2 * d.g; ++k) os << ',' << format_double(d.a[k].real()) << ',' << format_double(d.a[k].imag());
  for (int k = 0; k <= d.g + 1; ++k) os << ',' << format_double(d.b[k].real()) << ',' << format_double(d.b[k].imag());
  double dm = INFINITY;
  for (cplx v : dg.delta_b)
    if (std::isfinite(v.real())) dm = std::min(dm, std::min(std::abs(v - 2.0), std::abs(v + 2.0)));
  os << ',' << format_double(d.lambda1.real()) << ',' << format_double(d.lambda1.imag()) << ','
     << format_double(dg.short_arc) << ',' << format_double(dg.min_root_a_distance) << ','
     << format_double(dg.min_b_to_a) << ',' << format_double(dg.min_b_to_sym) << ',' << format_double(dm) << ',';
  for (size_t k = first_event; k < s.events.size(); ++k)
    os << (k > first_event ? ";" : "") << whitham::to_string(s.events[k].kind);
  os << '\n';
}

int cmd_flow(const RunConfig& c) {
  SpectralData d = parse_spectral_data(read_file(c.data));
  whitham::FlowState s{d, 0.0, {}, {}};
  std::ofstream log;
  if (!c.log.empty()) {
    log.open(c.log);
    if (!log) throw Error(c.log + ": cannot write");
    log_header(log, d);
    log_row(log, s, 0);
  }
  int status = 0;
  if (c.steps > 0) {
    auto strat = whitham::make_strategy(strategy_spec(c), d);
    s.active = whitham::monitors(s).active;
    for (int k = 0; k < c.steps; ++k) {
      size_t before = s.events.size();
      try {
        s = whitham::advance(s, *strat, c.dt);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        std::cerr << "flow stopped at t = " << format_double(s.t) << ": " << e.what() << "\n";
        status = 3;
        break;
      }
      if (log) log_row(log, s, before);
    }
  }
  for (const auto& e : s.events)
    std::cerr << "event " << whitham::to_string(e.kind) << " t=" << format_double(e.time) << " at ("
              << format_double(e.location.real()) << ", " << format_double(e.location.imag()) << ")\n";
  emit(c, serialize(s.data));
  return status;
}

int cmd_surface(const RunConfig& c) {
  SpectralData d = parse_spectral_data(read_file(c.data));
  Potential xi = offdiag_potential(d.a, d.g);
  cplx tau = 32.0 * d.b[0];
  MeshOptions opt;
  opt.nx = opt.ny = c.resolution;
  opt.substeps = c.substeps;
  bool real_period = std::abs(tau.imag()) <= 1e-12 * std::abs(tau) && std::abs(tau) > 0.0;
  opt.x_extent = real_period ? std::abs(tau.real()) : 1.0;
  opt.y_extent = c.y_extent;
  SurfaceMesh m = build_mesh(xi, d.lambda1, d.lambda2(), opt);
  GeometryReport g = analyze(m, mean_curvature(d));
  std::filesystem::create_directories(c.out_dir);
  std::filesystem::path dir(c.out_dir);
  write_obj(m, (dir / "surface.obj").string());
  write_r4_csv(m, (dir / "surface_r4.csv").string());
  json j;
  j["H"] = mean_curvature(d);
  j["x_extent"] = opt.x_extent;
  j["y_extent"] = opt.y_extent;
  j["resolution"] = c.resolution;
  j["on_sphere"] = g.on_sphere;
  j["mean_curvature"] = g.mean_curvature;
  j["mean_curvature_error"] = g.mean_curvature_error;
  j["conformality"] = g.conformality;
  j["conformal_factor"] = g.conformal_factor;
  j["rotational"] = g.rotational;
  j["rotational_theta"] = g.rotational_theta;
  j["max_unitarity_correction"] = m.max_correction;
  if (real_period) j["closure"] = closure_defect(m);
  write_file((dir / "geometry.json").string(), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return g.on_sphere < 1e-8 ? 0 : 3;
}

int cmd_isospectral(const RunConfig& c) {
  Potential xi;
  if (!c.potential.empty()) xi = parse_potential(read_file(c.potential));
  else if (!c.data.empty()) {
    SpectralData d = parse_spectral_data(read_file(c.data));
    xi = offdiag_potential(d.a, d.g);
  } else {
    throw ParseError("isospectral: --potential or --data is required");
  }
  Poly a = minus_lambda_det(xi);
  for (int k = 0; k < c.steps; ++k) xi = isospectral_step(xi, c.iso_direction, c.dt);
  std::cerr << "det drift " << format_double(max_coeff_diff(minus_lambda_det(xi), a)) << "\n";
  emit(c, serialize(xi));
  return 0;
}

int cmd_period(const RunConfig& c) {
  SpectralData d = parse_spectral_data(read_file(c.data));
  Period p;
  if (!c.guess.empty()) {
    if (c.guess.size() != 2) throw ParseError("--guess: expected re im");
    p = find_period(offdiag_potential(d.a, d.g), d.lambda1, d.lambda2(), {c.guess[0], c.guess[1]}, c.tol);
  } else {
    p = find_period(d, c.tol);
  }
  json j;
  j["tau"] = json::array({p.tau.real(), p.tau.imag()});
  j["objective"] = p.objective;
  j["sign"] = p.sign;
  emit(c, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  if (const char* t = std::getenv("SPECTRAL_CMC_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
  RunConfig c;
  CLI::App app{"spectral data, Whitham flows and surfaces of CMC cylinders in the 3-sphere"};
  app.require_subcommand(1);

  auto data_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--data", c.data, "spectral data JSON");
    if (required) o->required();
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", c.out, "output file (default stdout)"); };

  auto* validate = app.add_subcommand("validate", "check conditions (i)-(v) of spectral data");
  data_opt(validate, true);
  out_opt(validate);
  validate->add_option("--tol", c.tol)->check(CLI::PositiveNumber);

  auto* rotgen = app.add_subcommand("rot-gen", "rotational spectral data in closed form");
  rotgen->add_option("--genus", c.genus)->check(CLI::Range(0, 1));
  rotgen->add_option("--H", c.H)->check(CLI::NonNegativeNumber);
  rotgen->add_option("--alpha", c.alpha);
  rotgen->add_flag("--non-embedded", c.non_embedded);
  out_opt(rotgen);

  auto flow_opts = [&](CLI::App* s) {
    data_opt(s, true);
    out_opt(s);
    s->add_option("--strategy", c.strategy)->check(CLI::IsMember({"shrink", "separate", "move-root", "track"}));
    s->add_option("--dt", c.dt)->check(CLI::PositiveNumber);
    s->add_option("--steps", c.steps)->check(CLI::NonNegativeNumber);
    s->add_option("--log", c.log, "trajectory CSV");
    s->add_option("--sign", c.sign, "separate: +1 along the circle, -1 off it");
    s->add_option("--beta", c.beta, "move-root: re im of the circle root")->expected(2);
    s->add_option("--direction", c.direction, "move-root: direction");
    s->add_option("--rates", c.rates, "track: re im per root of b");
  };
  auto* flowrun = app.add_subcommand("flow-run", "integrate a Whitham flow");
  flow_opts(flowrun);
  auto* flow = app.add_subcommand("flow", "Whitham flows");
  flow->require_subcommand(1);
  auto* flowrun2 = flow->add_subcommand("run", "integrate a Whitham flow");
  flow_opts(flowrun2);

  auto* surface = app.add_subcommand("surface", "Sym-Bobenko mesh over one period");
  data_opt(surface, true);
  surface->add_option("--resolution", c.resolution)->check(CLI::Range(4, 4096));
  surface->add_option("--out-dir", c.out_dir);
  surface->add_option("--y-extent", c.y_extent)->check(CLI::PositiveNumber);
  surface->add_option("--substeps", c.substeps)->check(CLI::Range(1, 1000));

  auto* iso = app.add_subcommand("isospectral", "isospectral steps on the potential");
  data_opt(iso, false);
  iso->add_option("--potential", c.potential);
  iso->add_option("--direction", c.iso_direction)->check(CLI::NonNegativeNumber);
  iso->add_option("--dt", c.dt)->check(CLI::PositiveNumber);
  iso->add_option("--steps", c.steps)->check(CLI::NonNegativeNumber);
  out_opt(iso);

  auto* period = app.add_subcommand("period", "closing period of the frame");
  data_opt(period, true);
  period->add_option("--guess", c.guess, "free search from re im")->expected(2);
  period->add_option("--tol", c.tol)->check(CLI::PositiveNumber);
  out_opt(period);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(c);
    if (rotgen->parsed()) return cmd_rot_gen(c);
    if (flowrun->parsed() || flowrun2->parsed()) return cmd_flow(c);
    if (surface->parsed()) return cmd_surface(c);
    if (iso->parsed()) return cmd_isospectral(c);
    if (period->parsed()) return cmd_period(c);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace scmc
