// xpmcav: cavity-enhanced cross-phase modulation calculator.
//
// Subcommands: presets, eval, optimize, sweep, tradeoff.  See --help.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xpm/xpm.hpp"

namespace {

// Exit codes: 0 ok, 2 bad config, 3 compute failure, 4 I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- system construction ---------------------------------------------------

struct SystemOptions {
  CLI::App* cmd = nullptr;
  std::string preset = "rb";
  std::string preset_file;
  xpm::LadderSystem explicit_sys{};
  double od_override = 0.0;

  bool preset_given() const { return cmd->count("--preset") > 0; }
  bool file_given() const { return cmd->count("--preset-file") > 0; }
  std::size_t explicit_count() const {
    return cmd->count("--mu1") + cmd->count("--mu2") + cmd->count("--gamma1") +
           cmd->count("--gamma2") + cmd->count("--lambda-c") +
           cmd->count("--lambda-p") + cmd->count("--density") +
           cmd->count("--cell-length");
  }
  bool od_given() const { return cmd->count("--od") > 0; }

  // True when --od alone pins the physics and no medium details are needed.
  bool od_shortcut() const {
    return od_given() && !preset_given() && !file_given() &&
           explicit_count() == 0;
  }
};

void add_system_options(CLI::App* cmd, SystemOptions& opt) {
  opt.cmd = cmd;
  cmd->add_option("--preset", opt.preset, "named system (see 'presets')");
  cmd->add_option("--preset-file", opt.preset_file,
                  "key=value system description file");
  cmd->add_option("--mu1", opt.explicit_sys.mu1,
                  "control transition dipole moment, C m");
  cmd->add_option("--mu2", opt.explicit_sys.mu2,
                  "probe transition dipole moment, C m");
  cmd->add_option("--gamma1", opt.explicit_sys.gamma1,
                  "control half linewidth, rad/s");
  cmd->add_option("--gamma2", opt.explicit_sys.gamma2,
                  "probe half linewidth, rad/s");
  cmd->add_option("--lambda-c", opt.explicit_sys.lambda_control,
                  "control wavelength, m");
  cmd->add_option("--lambda-p", opt.explicit_sys.lambda_probe,
                  "probe wavelength, m");
  cmd->add_option("--density", opt.explicit_sys.number_density,
                  "number density, m^-3");
  cmd->add_option("--cell-length", opt.explicit_sys.length,
                  "interaction length, m");
  cmd->add_option("--od", opt.od_override,
                  "rescale the density to hit this on-resonance OD")
      ->check(CLI::PositiveNumber);
}

xpm::LadderSystem build_system(const SystemOptions& opt) {
  int sources = 0;
  if (opt.preset_given()) ++sources;
  if (opt.file_given()) ++sources;
  if (opt.explicit_count() > 0) ++sources;
  if (sources > 1)
    throw std::invalid_argument(
        "give exactly one system source: --preset, --preset-file, or explicit fields");

  xpm::LadderSystem sys;
  if (opt.file_given()) {
    sys = xpm::load_preset_file(opt.preset_file);
  } else if (opt.explicit_count() > 0) {
    sys = opt.explicit_sys;
    if (sys.mu1 == 0.0 && sys.gamma1 > 0.0 && sys.lambda_control > 0.0)
      sys.mu1 = xpm::mu1_from_gamma1(sys.gamma1, sys.lambda_control);
    sys.validate();
  } else {
    sys = xpm::make_preset(opt.preset);
  }
  if (opt.od_given()) {
    const double current = xpm::on_resonance_od(sys);
    sys.number_density *= opt.od_override / current;
    sys.validate();
  }
  return sys;
}

// od for the dimensionless subcommands: --od alone is enough; otherwise it
// comes from (possibly rescaled) system parameters.
double resolve_od(const SystemOptions& opt) {
  if (opt.od_shortcut()) return opt.od_override;
  return xpm::on_resonance_od(build_system(opt));
}

// ---- output helpers --------------------------------------------------------

enum class Format { csv, json };

void write_table_file(const xpm::SweepTable& table, const std::string& path,
                      Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  try {
    if (format == Format::csv)
      xpm::write_csv(table, out);
    else
      xpm::write_json(table, out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
  } catch (...) {
    out.close();
    std::remove(path.c_str());
    throw;
  }
  std::cout << "wrote " << table.rows.size() << " rows to " << path << "\n";
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

// ---- subcommand: presets ---------------------------------------------------

int run_presets(const std::string& dump, const std::string& output) {
  if (dump.empty()) {
    for (const auto& name : xpm::preset_names()) std::cout << name << "\n";
    return kExitOk;
  }
  const xpm::LadderSystem sys = xpm::make_preset(dump);
  if (output.empty()) {
    xpm::save_preset(sys, std::cout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
    xpm::save_preset(sys, out);
    out.flush();
    if (!out) {
      out.close();
      std::remove(output.c_str());
      throw IoError("write failed for '" + output + "'");
    }
  }
  return kExitOk;
}

// ---- subcommand: eval ------------------------------------------------------

struct EvalOptions {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double intensity = 10.0;  // W/m^2
  double reflectivity = 0.99;
  double cavity_length = 0.01;
  double kcl = 0.0;
  double mode_area = 0.0;
};

int run_eval(const SystemOptions& sys_opt, const EvalOptions& e) {
  const xpm::LadderSystem sys = build_system(sys_opt);
  const xpm::Detuning det{e.delta1, e.delta2};
  det.validate();
  const xpm::ControlField field{e.intensity};
  field.validate();

  const double od = xpm::on_resonance_od(sys);
  const double x = xpm::od_detuned(od, e.delta1);
  const double f = xpm::f_factor(det, od);
  const double phi_max = xpm::phi_max(sys, field);
  const double phi_nc = xpm::phi_nc(sys, field, det);
  const double phi_pp = xpm::phi_per_photon(sys);
  const double i_pp = xpm::single_photon_intensity(sys);

  std::cout << "system:\n"
            << "  mu1            = " << fmt(sys.mu1) << " C m\n"
            << "  mu2            = " << fmt(sys.mu2) << " C m\n"
            << "  gamma1         = " << fmt(sys.gamma1) << " rad/s ("
            << fmt(sys.gamma1 / (2.0 * xpm::kPi)) << " Hz x 2pi)\n"
            << "  gamma2         = " << fmt(sys.gamma2) << " rad/s ("
            << fmt(sys.gamma2 / (2.0 * xpm::kPi)) << " Hz x 2pi)\n"
            << "  lambda_control = " << fmt(sys.lambda_control) << " m\n"
            << "  lambda_probe   = " << fmt(sys.lambda_probe) << " m\n"
            << "  density        = " << fmt(sys.number_density) << " m^-3\n"
            << "  length         = " << fmt(sys.length) << " m\n"
            << "  od             = " << fmt(od) << "\n";
  std::cout << "point:\n"
            << "  delta1 = " << fmt(e.delta1) << ", delta2 = " << fmt(e.delta2)
            << "\n"
            << "  intensity = " << fmt(e.intensity) << " W/m^2 ("
            << fmt(xpm::to_nw_per_um2(e.intensity)) << " nW/um^2)\n";
  std::cout << "single pass:\n"
            << "  f         = " << fmt(f) << "\n"
            << "  T_control = "
            << fmt(xpm::transmission_single_pass(od, e.delta1)) << "\n"
            << "  phi_max   = " << fmt(phi_max) << " rad ("
            << fmt(xpm::to_mrad(phi_max)) << " mrad)\n"
            << "  phi_nc    = " << fmt(phi_nc) << " rad ("
            << fmt(xpm::to_mrad(phi_nc)) << " mrad)\n"
            << "  phi_pp    = " << fmt(phi_pp) << " rad ("
            << fmt(xpm::to_mrad(phi_pp)) << " mrad)\n"
            << "  I_pp      = " << fmt(i_pp) << " W/m^2 ("
            << fmt(xpm::to_nw_per_um2(i_pp)) << " nW/um^2)\n";

  if (e.reflectivity <= 0.0) return kExitOk;  // no cavity requested

  xpm::CavityConfig cfg{e.reflectivity, e.cavity_length, e.kcl};
  cfg.validate();
  const double F = xpm::finesse(cfg);
  const xpm::IntracavityIntensity intra = xpm::intracavity_intensities(cfg, x);
  // Rightward probe pass overlaps the leftward control beam and vice versa.
  const xpm::PassPhases ph{intra.leftward * phi_nc, intra.rightward * phi_nc};
  const double g = xpm::g_factor(det, od, cfg.reflectivity);
  const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(od, cfg.reflectivity);
  const xpm::BandwidthCheck bw = xpm::cavity_bandwidth_check(sys, cfg);

  std::cout << "cavity (R = " << fmt(cfg.reflectivity)
            << ", L = " << fmt(cfg.length) << " m, k_c L = " << fmt(e.kcl)
            << "):\n"
            << "  finesse      = " << fmt(F) << "\n"
            << "  I_rightward  = " << fmt(intra.rightward) << " x input\n"
            << "  I_leftward   = " << fmt(intra.leftward) << " x input\n"
            << "  phi1         = " << fmt(ph.phi1) << " rad, phi2 = "
            << fmt(ph.phi2) << " rad"
            << (ph.within_linear_regime() ? "" : "  [outside linear regime]")
            << "\n"
            << "  phi_c exact  = " << fmt(xpm::phi_cavity_exact(cfg, ph))
            << " rad\n"
            << "  phi_c linear = " << fmt(xpm::phi_cavity_linear(cfg, ph))
            << " rad"
            << (std::abs(ph.phi1 + ph.phi2) <= 0.1 * (1.0 - cfg.reflectivity)
                    ? ""
                    : "  [expansion needs |phi1+phi2| << 1-R]")
            << "\n"
            << "  g            = " << fmt(g) << "\n"
            << "  g_max asym   = " << fmt(peak.g) << " (F/4pi) at delta1 = "
            << fmt(peak.location.delta1) << ", delta2 = -1"
            << (peak.within_validity ? "" : "  [outside asymptotic validity]")
            << "\n"
            << "  phi_pp^C     = " << fmt(g * phi_pp)
            << " rad at this point; " << fmt(peak.g * phi_pp) << " rad ("
            << fmt(xpm::to_mrad(peak.g * phi_pp))
            << " mrad) at the asymptotic optimum\n"
            << "  T_c          = " << fmt(xpm::control_transmission(cfg, x))
            << "\n"
            << "  OD_C         = " << fmt(xpm::od_cavity(cfg.reflectivity, x))
            << "\n"
            << "  eta_eff      = " << fmt(xpm::eta_effective(od, e.delta1, F))
            << "\n";
  if (e.mode_area > 0.0) {
    const double sigma =
        3.0 * sys.lambda_control * sys.lambda_control / (2.0 * xpm::kPi);
    const xpm::CooperativityContext ctx{e.mode_area, sigma};
    std::cout << "  eta (mode)   = " << fmt(xpm::eta_on_resonance(ctx, F))
              << "  (mode area " << fmt(e.mode_area) << " m^2)\n";
  }
  std::cout << "  bandwidth    : L F = " << fmt(bw.cavity_scale)
            << " m vs c/(2 gamma1) = " << fmt(bw.atomic_scale)
            << " m, margin = " << fmt(bw.margin) << " ["
            << (bw.ok ? "ok" : "exceeded") << "]\n";
  return kExitOk;
}

// ---- subcommand: optimize --------------------------------------------------

void print_extremum(const char* label, const xpm::ExtremumResult& r) {
  std::cout << "  " << label << ": " << xpm::to_string(r.kind) << " = "
            << fmt(r.value) << " at delta1 = " << fmt(r.location.delta1)
            << ", delta2 = " << fmt(r.location.delta2)
            << "\n    T = " << fmt(r.transmission)
            << ", grad = " << fmt(r.gradient_norm) << ", "
            << (r.converged ? "converged" : "NOT converged") << "\n";
}

int run_optimize(const SystemOptions& sys_opt, const std::string& function,
                 double reflectivity) {
  const double od = resolve_od(sys_opt);

  bool all_converged = true;
  if (function == "f") {
    std::cout << "single-pass optimum (od = " << fmt(od) << "):\n";
    const xpm::ExtremumResult best = xpm::maximize_f(od);
    print_extremum("forward ", best);
    print_extremum("mirrored", xpm::negated(best));
    all_converged = best.converged;
    if (auto far = xpm::find_far_detuned_min_f(od)) {
      print_extremum("far min ", *far);
      print_extremum("mirrored", xpm::negated(*far));
      all_converged = all_converged && far->converged;
    } else {
      std::cout
          << "  far min : no interior far-detuned minimum in the search box\n";
    }
  } else if (function == "g") {
    if (!(reflectivity > 0.0))
      throw std::invalid_argument(
          "optimize g: R = 0 has no cavity; give --reflectivity in (0, 1)");
    std::cout << "cavity optimum (od = " << fmt(od)
              << ", R = " << fmt(reflectivity) << "):\n";
    const xpm::ExtremumResult best = xpm::maximize_g(od, reflectivity);
    print_extremum("forward ", best);
    print_extremum("mirrored", xpm::negated(best));
    all_converged = best.converged;
    const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(od, reflectivity);
    const double x = xpm::od_detuned(od, best.location.delta1);
    std::cout << "  asymptote: F/4pi = " << fmt(peak.g) << " at delta1 = "
              << fmt(peak.location.delta1) << ", delta2 = -1"
              << (peak.within_validity ? "" : "  [outside validity range]")
              << "\n"
              << "  ratios   : g/(F/4pi) = " << fmt(best.value / peak.g)
              << ", delta1/sqrt(od F/pi) = "
              << fmt(best.location.delta1 / peak.location.delta1) << "\n"
              << "  e^{-x}   = " << fmt(std::exp(-x)) << " vs R = "
              << fmt(reflectivity) << "\n"
              << "  OD_C     = " << fmt(xpm::od_cavity(reflectivity, x))
              << ", eta_eff = "
              << fmt(xpm::eta_effective(od, best.location.delta1,
                                        xpm::finesse(reflectivity)))
              << "\n";
  } else {
    throw std::invalid_argument("optimize: --function must be f or g");
  }
  return all_converged ? kExitOk : kExitCompute;
}

// ---- subcommand: sweep -----------------------------------------------------

struct SweepOptions {
  std::string spec;
  std::string function;
  std::string axis;
  double from = 0.0, to = 0.0;
  std::size_t points = 0;
  bool linear = false;
  double d1_min = 0.0, d1_max = 0.0, d2_min = 0.0, d2_max = 0.0;
  std::size_t resolution = 0;
  double reflectivity = 0.0;
  std::string output;
  std::string format = "csv";
};

int run_sweep(const SystemOptions& sys_opt, const SweepOptions& s) {
  const Format format = s.format == "json" ? Format::json : Format::csv;
  const bool r_given = sys_opt.cmd->count("--reflectivity") > 0;

  if (!s.spec.empty()) {
    if (s.spec == "fig2") {
      write_table_file(xpm::fig2_curves(), s.output, format);
    } else if (s.spec == "fig3") {
      write_table_file(xpm::fig3_landscape(), s.output, format);
    } else if (s.spec == "fig4") {
      write_table_file(xpm::fig4_min_branch(), s.output, format);
    } else if (s.spec == "fig6") {
      if (r_given) {
        write_table_file(xpm::fig6_landscape(s.reflectivity), s.output, format);
      } else {
        write_table_file(xpm::fig6_landscape(0.99),
                         with_suffix(s.output, "_R0.99"), format);
        write_table_file(xpm::fig6_landscape(0.999999),
                         with_suffix(s.output, "_R0.999999"), format);
      }
    } else {
      throw std::invalid_argument("sweep: unknown --spec '" + s.spec +
                                  "' (use fig2|fig3|fig4|fig6)");
    }
    return kExitOk;
  }

  if (s.axis == "od") {
    if (!(s.from > 0.0) || !(s.to > s.from) || s.points < 2)
      throw std::invalid_argument(
          "sweep: need 0 < --from < --to and --points >= 2");
    const std::vector<double> samples =
        s.linear ? xpm::linspace(s.from, s.to, s.points)
                 : xpm::logspace(s.from, s.to, s.points);
    if (s.function == "f") {
      write_table_file(xpm::sweep_f_vs_od(samples), s.output, format);
    } else if (s.function == "fmin") {
      write_table_file(xpm::sweep_min_vs_od(samples), s.output, format);
    } else {
      throw std::invalid_argument("sweep over od: --function must be f or fmin");
    }
    return kExitOk;
  }

  if (s.axis == "detuning") {
    const double od = resolve_od(sys_opt);
    xpm::LandscapeFunction fun;
    if (s.function == "f") {
      fun = xpm::LandscapeFunction::single_pass_f;
    } else if (s.function == "g") {
      fun = xpm::LandscapeFunction::cavity_g;
      if (!r_given)
        throw std::invalid_argument("sweep g landscape: --reflectivity required");
    } else {
      throw std::invalid_argument(
          "sweep over detuning: --function must be f or g");
    }
    write_table_file(xpm::contour_grid(fun, od, s.reflectivity, s.d1_min,
                                       s.d1_max, s.d2_min, s.d2_max,
                                       s.resolution),
                     s.output, format);
    return kExitOk;
  }

  throw std::invalid_argument(
      "sweep: give --spec figN, or --axis od|detuning with a range");
}

// ---- subcommand: tradeoff --------------------------------------------------

int run_tradeoff(const SystemOptions& sys_opt, std::vector<double> epsilons,
                 double reflectivity, const std::string& output,
                 const std::string& format_name) {
  if (!(reflectivity > 0.0) || !(reflectivity < 1.0))
    throw std::invalid_argument("tradeoff: --reflectivity must be in (0, 1)");
  const double od = resolve_od(sys_opt);

  std::sort(epsilons.begin(), epsilons.end());
  if (std::adjacent_find(epsilons.begin(), epsilons.end()) != epsilons.end())
    throw std::invalid_argument("tradeoff: duplicate epsilon values");

  const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(od, reflectivity);
  xpm::SweepTable table;
  table.axis = "epsilon";
  table.columns = {"transmission", "detuned_od", "delta1", "gain",
                   "gain_over_gmax"};
  bool any_large = false;
  for (double eps : epsilons) {
    const xpm::TradeoffPoint pt =
        xpm::transmission_tradeoff(eps, od, reflectivity);
    any_large = any_large || !pt.epsilon_small;
    table.axis_values.push_back(eps);
    table.rows.push_back(
        {1.0 - eps, pt.detuned_od, pt.delta1, pt.gain, pt.gain / peak.g});
  }
  table.validate();

  if (!output.empty()) {
    write_table_file(table, output,
                     format_name == "json" ? Format::json : Format::csv);
  } else {
    std::cout << "tradeoff (od = " << fmt(od) << ", R = " << fmt(reflectivity)
              << ", F = " << fmt(xpm::finesse(reflectivity)) << "):\n"
              << "  eps        T_c        x          delta1     g_eps      "
                 "g_eps/g_max\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      std::printf("  %-10.4g %-10.4g %-10.4g %-10.4g %-10.4g %-10.4g\n",
                  table.axis_values[i], table.rows[i][0], table.rows[i][1],
                  table.rows[i][2], table.rows[i][3], table.rows[i][4]);
    }
    if (any_large)
      std::cout
          << "  note: epsilon > 0.1 stretches the leading-order expansion\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavity-enhanced cross-phase modulation calculator"};
  app.require_subcommand(1);

  // presets
  auto* presets = app.add_subcommand("presets", "list or dump named systems");
  std::string dump_name, presets_output;
  presets->add_option("--dump", dump_name, "dump this preset as key=value");
  presets->add_option("--output", presets_output, "write dump to a file");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate phases at a working point");
  SystemOptions eval_sys;
  add_system_options(eval, eval_sys);
  EvalOptions eval_opt;
  double intensity_display = 0.0;
  eval->add_option("--delta1", eval_opt.delta1, "control detuning / gamma1");
  eval->add_option("--delta2", eval_opt.delta2, "probe detuning / gamma2");
  auto* intensity_si = eval->add_option("--intensity", eval_opt.intensity,
                                        "control intensity, W/m^2");
  eval->add_option("--intensity-nwum2", intensity_display,
                   "control intensity, nW/um^2")
      ->excludes(intensity_si);
  eval->add_option("-R,--reflectivity", eval_opt.reflectivity,
                   "mirror reflectivity (0 disables the cavity block)");
  eval->add_option("--cavity-length", eval_opt.cavity_length,
                   "mirror spacing, m");
  eval->add_option("--kcl", eval_opt.kcl, "control round-trip phase k_c L");
  eval->add_option("--mode-area", eval_opt.mode_area,
                   "cavity mode area for the coupling estimate, m^2");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "locate landscape extrema");
  SystemOptions opt_sys;
  add_system_options(optimize, opt_sys);
  std::string opt_function;
  double opt_reflectivity = 0.0;
  optimize->add_option("--function", opt_function,
                       "f (single pass) or g (cavity)")
      ->required();
  optimize->add_option("-R,--reflectivity", opt_reflectivity,
                       "mirror reflectivity (required for g)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "batch curves and landscapes");
  SystemOptions sweep_sys;
  add_system_options(sweep, sweep_sys);
  SweepOptions sweep_opt;
  sweep->add_option("--spec", sweep_opt.spec, "canned sweep: fig2|fig3|fig4|fig6");
  sweep->add_option("--function", sweep_opt.function,
                    "f|fmin (od axis), f|g (detuning)");
  sweep->add_option("--axis", sweep_opt.axis, "od or detuning");
  sweep->add_option("--from", sweep_opt.from, "axis start");
  sweep->add_option("--to", sweep_opt.to, "axis end");
  sweep->add_option("--points", sweep_opt.points, "number of axis samples");
  sweep->add_flag("--linear", sweep_opt.linear, "linear od spacing (default log)");
  sweep->add_option("--d1-min", sweep_opt.d1_min, "delta1 range start");
  sweep->add_option("--d1-max", sweep_opt.d1_max, "delta1 range end");
  sweep->add_option("--d2-min", sweep_opt.d2_min, "delta2 range start");
  sweep->add_option("--d2-max", sweep_opt.d2_max, "delta2 range end");
  sweep->add_option("--resolution", sweep_opt.resolution, "grid points per axis");
  sweep->add_option("-R,--reflectivity", sweep_opt.reflectivity,
                    "mirror reflectivity for g");
  sweep->add_option("--output", sweep_opt.output, "output path")->required();
  sweep->add_option("--format", sweep_opt.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // tradeoff
  auto* tradeoff =
      app.add_subcommand("tradeoff", "transparency vs gain working points");
  SystemOptions tr_sys;
  add_system_options(tradeoff, tr_sys);
  std::vector<double> tr_eps;
  double tr_reflectivity = 0.0;
  std::string tr_output, tr_format = "csv";
  tradeoff
      ->add_option("--epsilon", tr_eps,
                   "accepted control loss values, each in (0, 1)")
      ->required()
      ->expected(-1);
  tradeoff->add_option("-R,--reflectivity", tr_reflectivity, "mirror reflectivity")
      ->required();
  tradeoff->add_option("--output", tr_output, "write the table to a file");
  tradeoff->add_option("--format", tr_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (eval->count("--intensity-nwum2") > 0)
    eval_opt.intensity = xpm::from_nw_per_um2(intensity_display);

  try {
    if (presets->parsed()) return run_presets(dump_name, presets_output);
    if (eval->parsed()) return run_eval(eval_sys, eval_opt);
    if (optimize->parsed())
      return run_optimize(opt_sys, opt_function, opt_reflectivity);
    if (sweep->parsed()) return run_sweep(sweep_sys, sweep_opt);
    if (tradeoff->parsed())
      return run_tradeoff(tr_sys, tr_eps, tr_reflectivity, tr_output, tr_format);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "compute error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}
