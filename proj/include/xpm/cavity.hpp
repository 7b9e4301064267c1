#pragma once

// Low-loss two-mirror cavity wrapped around the ladder gas.  The probe picks
// up a directional XPM phase per pass (phi1 rightward, phi2 leftward) set by
// the intracavity control intensities; summing the bounce series gives the
// output phase and the finesse-scaled enhancement factor g.

#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "xpm/constants.hpp"
#include "xpm/ladder.hpp"

namespace xpm {

struct CavityConfig {
  double reflectivity = 0.0;    // both mirrors, intensity R in [0, 1)
  double length = 0.0;          // mirror spacing, m
  double roundtrip_phase = 0.0; // control round-trip phase k_c L (mod 2 pi matters)

  void validate() const {
    if (!(reflectivity >= 0.0) || !(reflectivity < 1.0))
      throw std::invalid_argument("CavityConfig: reflectivity must be in [0, 1)");
    if (!(length > 0.0) || !std::isfinite(length))
      throw std::invalid_argument("CavityConfig: length must be positive");
    if (!std::isfinite(roundtrip_phase))
      throw std::invalid_argument("CavityConfig: roundtrip_phase must be finite");
  }
};

// XPM phase per directional pass of the probe.
struct PassPhases {
  double phi1 = 0.0;  // rightward pass
  double phi2 = 0.0;  // leftward pass

  // The closed forms below assume both pass phases are small.
  bool within_linear_regime(double threshold = 0.1) const {
    return std::abs(phi1) <= threshold && std::abs(phi2) <= threshold;
  }
};

// Geometry needed for the single-photon coupling estimate.
struct CooperativityContext {
  double mode_area = 0.0;       // cavity mode cross section, m^2
  double cross_section = 0.0;   // atomic resonant cross section, m^2

  void validate() const {
    if (!(mode_area > 0.0) || !(cross_section > 0.0))
      throw std::invalid_argument("CooperativityContext: areas must be positive");
  }
};

inline double finesse(double reflectivity) {
  if (!(reflectivity >= 0.0) || !(reflectivity < 1.0))
    throw std::invalid_argument("finesse: reflectivity must be in [0, 1)");
  return kPi * std::sqrt(reflectivity) / (1.0 - reflectivity);
}

inline double finesse(const CavityConfig& cfg) {
  return finesse(cfg.reflectivity);
}

namespace detail {

// 1 - R e^{-x} evaluated as (1-R) - R expm1(-x); immune to the cancellation
// that otherwise wipes out the difference when x ~ 1-R << 1.
inline double one_minus_r_exp(double reflectivity, double x) {
  return (1.0 - reflectivity) - reflectivity * std::expm1(-x);
}

}  // namespace detail

// Transmitted probe amplitude from the geometric bounce series,
//   A_t = (1-R) e^{i(delta + phi1)} / (1 - R e^{i(2 delta + phi1 + phi2)}),
// where delta is the one-way probe propagation phase (complex for a lossy
// medium, Im(delta) >= 0).  Throws if the series does not converge.
inline std::complex<double> output_amplitude(const CavityConfig& cfg,
                                             std::complex<double> propagation_phase,
                                             const PassPhases& ph) {
  const std::complex<double> i{0.0, 1.0};
  const double R = cfg.reflectivity;
  const std::complex<double> roundtrip =
      R * std::exp(i * (2.0 * propagation_phase + ph.phi1 + ph.phi2));
  if (!(std::abs(roundtrip) < 1.0))
    throw std::domain_error("output_amplitude: bounce series diverges (|R e^{i 2 delta}| >= 1)");
  return (1.0 - R) * std::exp(i * (propagation_phase + ph.phi1)) /
         (1.0 - roundtrip);
}

// Nonlinear phase of the transmitted probe, exact in the pass phases:
//   phi_C = phi1 - arg(1 - R e^{i(phi1 + phi2)}).
// Equivalent to phi1 + (i/2) ln[(1 - R e^{i theta}) / (1 - R e^{-i theta})]
// on the principal branch; the argument stays in the right half plane for
// R < 1, so the principal branch is the physical one.
inline double phi_cavity_exact(const CavityConfig& cfg, const PassPhases& ph) {
  const double R = cfg.reflectivity;
  const double theta = ph.phi1 + ph.phi2;
  // real part as (1-R) + 2R sin^2(theta/2): exact down to theta ~ 1-R
  const double sh = std::sin(0.5 * theta);
  const std::complex<double> z{(1.0 - R) + 2.0 * R * sh * sh,
                               -R * std::sin(theta)};
  assert(z.real() > 0.0);  // guaranteed by R < 1; guards the branch cut
  return ph.phi1 - std::arg(z);
}

// Leading order in the pass phases: phi_C ~ (phi1 + R phi2) / (1 - R).
inline double phi_cavity_linear(const CavityConfig& cfg, const PassPhases& ph) {
  return (ph.phi1 + cfg.reflectivity * ph.phi2) / (1.0 - cfg.reflectivity);
}

// Steady-state intracavity control intensities (units of the input intensity),
// with the gas absorption sampled at the cell midpoint (half pass e^{-x/4}
// per traversal to/from the sampling plane):
//   I_r = (1-R) e^{-x/2} / [(1 - R e^{-x})^2 + 4 R e^{-x} sin^2(k_c L)]
//   I_l = R e^{-x} I_r.
struct IntracavityIntensity {
  double rightward = 0.0;
  double leftward = 0.0;
};

inline IntracavityIntensity intracavity_intensities(const CavityConfig& cfg,
                                                    double x) {
  const double R = cfg.reflectivity;
  const double q = R * std::exp(-x);
  const double omr = detail::one_minus_r_exp(R, x);
  const double s = std::sin(cfg.roundtrip_phase);
  const double denom = omr * omr + 4.0 * q * s * s;
  IntracavityIntensity out;
  out.rightward = (1.0 - R) * std::exp(-0.5 * x) / denom;
  out.leftward = q * out.rightward;
  return out;
}

// Cavity intensity buildup factor seen by the XPM phase,
//   alpha = R e^{-x/2} (1 + e^{-x}) / (1 - R e^{-x})^2,
// equal to (I_l + R I_r) / (1 - R) on control resonance.  At x = 0 this is
// 2R/(1-R)^2 = 2 F^2 / pi^2 exactly.  Strictly decreasing in x.
inline double alpha_factor(double x, double reflectivity) {
  const double R = reflectivity;
  const double em = std::exp(-x);
  const double denom = detail::one_minus_r_exp(R, x);
  return R * std::exp(-0.5 * x) * (1.0 + em) / (denom * denom);
}

// Cavity-enhanced XPM response relative to phi_max (the cavity analog of f):
//   g = -R e^{-x/2} (1 - e^{-2x}) / (1 - R e^{-x})^2
//       * (d1^2 d2 - 2 d1 - d2) / ((1+d1^2)(1+d2^2)),  x = od/(1+d1^2).
// Identity g = alpha(x, R) * f(d1, d2; od) holds exactly.
inline double g_factor(const Detuning& det, double od, double reflectivity) {
  const double d1 = det.delta1;
  const double d2 = det.delta2;
  const double R = reflectivity;
  const double lor1 = 1.0 + d1 * d1;
  const double lor2 = 1.0 + d2 * d2;
  const double x = od / lor1;
  const double denom = detail::one_minus_r_exp(R, x);
  const double buildup =
      R * std::exp(-0.5 * x) * (-std::expm1(-2.0 * x)) / (denom * denom);
  const double dispersion = d1 * d1 * d2 - 2.0 * d1 - d2;
  return -buildup * dispersion / (lor1 * lor2);
}

// High-finesse, large-OD asymptote of the optimal enhancement:
//   g_max ~ F / (4 pi)   at   (delta1, delta2) = (sqrt(OD F / pi), -1).
// Validity needs (F/pi) OD >> 1 and F/pi >> 1; flags use factor-of-10 margins.
struct AsymptoticPeak {
  double g = 0.0;
  Detuning location{};
  double od_margin = 0.0;       // (F/pi) * OD, want >> 1
  double finesse_margin = 0.0;  // F/pi, want >> 1
  bool within_validity = false;
};

inline AsymptoticPeak g_max_asymptotic(double od, double reflectivity) {
  if (!(od > 0.0))
    throw std::invalid_argument("g_max_asymptotic: od must be positive");
  const double F = finesse(reflectivity);
  AsymptoticPeak peak;
  peak.g = F / (4.0 * kPi);
  peak.location = Detuning{std::sqrt(od * F / kPi), -1.0};
  peak.od_margin = (F / kPi) * od;
  peak.finesse_margin = F / kPi;
  peak.within_validity = peak.od_margin >= 10.0 && peak.finesse_margin >= 10.0;
  return peak;
}

// Control transmission through the cavity (Airy profile with gas loss),
//   T_c = (1-R)^2 e^{-x} / [(1 - R e^{-x})^2 + 4 R e^{-x} sin^2(k_c L)].
inline double control_transmission(const CavityConfig& cfg, double x) {
  const double R = cfg.reflectivity;
  const double q = R * std::exp(-x);
  const double omr = detail::one_minus_r_exp(R, x);
  const double s = std::sin(cfg.roundtrip_phase);
  const double denom = omr * omr + 4.0 * q * s * s;
  return (1.0 - R) * (1.0 - R) * std::exp(-x) / denom;
}

// Peak of the profile above (cavity tuned to control resonance).
inline double control_transmission_peak(double reflectivity, double x) {
  const double R = reflectivity;
  const double num = (1.0 - R) / detail::one_minus_r_exp(R, x);
  return num * num * std::exp(-x);
}

// Effective control optical depth of the loaded cavity,
//   OD_C = -ln max_{k_c L} T_c = x + 2 ln[(1 - R e^{-x}) / (1 - R)].
inline double od_cavity(double reflectivity, double x) {
  const double R = reflectivity;
  // the ratio is 1 + R(1-e^{-x})/(1-R); log1p keeps small loads exact
  return x + 2.0 * std::log1p(-R * std::expm1(-x) / (1.0 - R));
}

// Backing off the gain to keep the cavity transparent: demanding
// T_c = 1 - epsilon forces x = (1-R) eps / 2, which caps the gain at
// g_eps = eps F / (2 pi) = 2 eps g_max and pushes the working detuning to
// delta1_eps = sqrt(2/eps) * delta1_star.
struct TradeoffPoint {
  double epsilon = 0.0;      // accepted control loss 1 - T_c
  double detuned_od = 0.0;   // x at the working point
  double gain = 0.0;         // g_eps
  double delta1 = 0.0;       // working control detuning
  bool epsilon_small = false;  // leading-order expansion trustworthy
};

inline TradeoffPoint transmission_tradeoff(double epsilon, double od,
                                           double reflectivity) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("transmission_tradeoff: epsilon must be in (0, 1)");
  if (!(od > 0.0))
    throw std::invalid_argument("transmission_tradeoff: od must be positive");
  const double F = finesse(reflectivity);
  TradeoffPoint pt;
  pt.epsilon = epsilon;
  pt.detuned_od = 0.5 * (1.0 - reflectivity) * epsilon;
  pt.gain = epsilon * F / (2.0 * kPi);
  pt.delta1 = std::sqrt(2.0 / epsilon) * std::sqrt(od * F / kPi);
  pt.epsilon_small = epsilon <= 0.1;
  return pt;
}

// Single-photon phase enhancement from mode matching:
//   eta = (4F/pi) * sigma / (2 A_m)  on resonance, and effectively
//   eta_eff = (F/pi) * OD / (1 + delta1^2)  once the whole column contributes.
inline double eta_on_resonance(const CooperativityContext& ctx, double F) {
  return (4.0 * F / kPi) * ctx.cross_section / (2.0 * ctx.mode_area);
}

inline double eta_effective(double od, double delta1, double F) {
  return (F / kPi) * od / (1.0 + delta1 * delta1);
}

// The bounce picture needs the cavity lifetime to beat the atomic response:
// L F < c / (2 gamma1).  margin < 1 means the check passes.
struct BandwidthCheck {
  double cavity_scale = 0.0;  // L * F
  double atomic_scale = 0.0;  // c / (2 gamma1)
  double margin = 0.0;        // ratio, want < 1
  bool ok = false;
};

inline BandwidthCheck cavity_bandwidth_check(const LadderSystem& sys,
                                             const CavityConfig& cfg) {
  BandwidthCheck chk;
  chk.cavity_scale = cfg.length * finesse(cfg);
  chk.atomic_scale = kSpeedOfLight / (2.0 * sys.gamma1);
  chk.margin = chk.cavity_scale / chk.atomic_scale;
  chk.ok = chk.margin < 1.0;
  return chk;
}

}  // namespace xpm
