#pragma once

// Single-pass model of cross-phase modulation in a three-level ladder gas.
// A control beam on the lower transition writes a cross-Kerr phase onto a
// probe on the upper transition.  Everything here is per unit pass; the
// cavity enhancement lives in cavity.hpp.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "xpm/constants.hpp"

namespace xpm {

// Probe/control detunings in units of the half linewidths gamma1, gamma2.
struct Detuning {
  double delta1 = 0.0;  // control detuning / gamma1
  double delta2 = 0.0;  // probe detuning / gamma2

  void validate() const {
    if (!std::isfinite(delta1) || !std::isfinite(delta2))
      throw std::invalid_argument("Detuning: components must be finite");
  }
};

// Atomic medium plus the two optical transitions.  All quantities SI.
struct LadderSystem {
  double mu1 = 0.0;             // lower (control) transition dipole moment, C m
  double mu2 = 0.0;             // upper (probe) transition dipole moment, C m
  double gamma1 = 0.0;          // lower transition half linewidth, rad/s
  double gamma2 = 0.0;          // upper transition half linewidth, rad/s
  double lambda_control = 0.0;  // control wavelength, m
  double lambda_probe = 0.0;    // probe wavelength, m
  double number_density = 0.0;  // atoms per m^3
  double length = 0.0;          // interaction length, m

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("LadderSystem: ") + name +
                                    " must be positive and finite");
    };
    positive(mu1, "mu1");
    positive(mu2, "mu2");
    positive(gamma1, "gamma1");
    positive(gamma2, "gamma2");
    positive(lambda_control, "lambda_control");
    positive(lambda_probe, "lambda_probe");
    positive(number_density, "number_density");
    positive(length, "length");
  }
};

// Control field drive strength.
struct ControlField {
  double intensity = 0.0;  // W/m^2

  void validate() const {
    if (!(intensity >= 0.0) || !std::isfinite(intensity))
      throw std::invalid_argument("ControlField: intensity must be >= 0 and finite");
  }
};

// Dipole moment implied by a radiatively broadened lower transition:
// 2*gamma1 equals the spontaneous rate  omega^3 mu^2 / (3 pi eps0 hbar c^3) / 2 ... i.e.
// mu1 = sqrt(6 pi eps0 hbar c^3 gamma1 / omega^3) with omega = 2 pi c / lambda.
inline double mu1_from_gamma1(double gamma1, double lambda_control) {
  if (!(gamma1 > 0.0) || !(lambda_control > 0.0))
    throw std::invalid_argument("mu1_from_gamma1: arguments must be positive");
  const double omega = 2.0 * kPi * kSpeedOfLight / lambda_control;
  return std::sqrt(6.0 * kPi * kVacuumPermittivity * kHbar *
                   kSpeedOfLight * kSpeedOfLight * kSpeedOfLight * gamma1 /
                   (omega * omega * omega));
}

// Third-order cross-Kerr susceptibility of the ladder medium,
//   chi3 = -N mu1^2 mu2^2 / (eps0 hbar^3 gamma1^2 gamma2) * 1/((i+d1)^2 (i+d2)).
inline std::complex<double> chi3(const LadderSystem& sys, const Detuning& det) {
  const std::complex<double> i{0.0, 1.0};
  const double prefactor =
      sys.number_density * sys.mu1 * sys.mu1 * sys.mu2 * sys.mu2 /
      (kVacuumPermittivity * kHbar * kHbar * kHbar * sys.gamma1 * sys.gamma1 *
       sys.gamma2);
  const std::complex<double> a = i + det.delta1;
  const std::complex<double> b = i + det.delta2;
  return -prefactor / (a * a * b);
}

// On-resonance optical depth for a radiatively broadened control transition.
// Resonant cross section sigma = 3 lambda^2 / (2 pi), so OD = 3 N d lambda^2 / (2 pi).
inline double od_from_density(double number_density, double length,
                              double lambda_control) {
  return 3.0 * number_density * length * lambda_control * lambda_control /
         (2.0 * kPi);
}

inline double on_resonance_od(const LadderSystem& sys) {
  return od_from_density(sys.number_density, sys.length, sys.lambda_control);
}

// Same optical depth through the dipole route, OD = k N mu1^2 d / (hbar eps0 gamma1).
// Agrees with on_resonance_od when mu1 = mu1_from_gamma1(...); kept as an
// independent code path for consistency checks.
inline double on_resonance_od_dipole(const LadderSystem& sys) {
  const double k = 2.0 * kPi / sys.lambda_control;
  return k * sys.number_density * sys.mu1 * sys.mu1 * sys.length /
         (kHbar * kVacuumPermittivity * sys.gamma1);
}

// Detuned optical depth  x = OD / (1 + delta1^2), the control absorption exponent.
inline double od_detuned(double od, double delta1) {
  return od / (1.0 + delta1 * delta1);
}

// Control intensity transmission after one pass, e^{-x}.
inline double transmission_single_pass(double od, double delta1) {
  return std::exp(-od_detuned(od, delta1));
}

// Normalized single-pass XPM response,
//   f = [1 - e^{-x}] (-d1^2 d2 + 2 d1 + d2) / ((1+d1^2)(1+d2^2)),
// bounded to [-1, 1]; antisymmetric under (d1,d2) -> (-d1,-d2).
inline double f_factor(const Detuning& det, double od) {
  const double d1 = det.delta1;
  const double d2 = det.delta2;
  const double lor1 = 1.0 + d1 * d1;
  const double lor2 = 1.0 + d2 * d2;
  const double absorbed = -std::expm1(-od / lor1);  // 1 - e^{-x}
  const double dispersion = -d1 * d1 * d2 + 2.0 * d1 + d2;
  return absorbed * dispersion / (lor1 * lor2);
}

// Saturation phase scale: XPM phase a fully absorbed, optimally detuned pass
// would write, per unit control intensity times the intensity itself,
//   phi_max = (3 mu2^2 / (2 eps0 c hbar^2 gamma1 gamma2)) (lambda_c/lambda_p) I0.
inline double phi_max(const LadderSystem& sys, const ControlField& field) {
  return 3.0 * sys.mu2 * sys.mu2 /
         (2.0 * kVacuumPermittivity * kSpeedOfLight * kHbar * kHbar *
          sys.gamma1 * sys.gamma2) *
         (sys.lambda_control / sys.lambda_probe) * field.intensity;
}

// Actual single-pass XPM phase at a given detuning pair.
inline double phi_nc(const LadderSystem& sys, const ControlField& field,
                     const Detuning& det) {
  return phi_max(sys, field) * f_factor(det, on_resonance_od(sys));
}

// Control intensity that puts one photon per atomic cross section per lifetime:
//   I_pp = 2 pi hbar c gamma2 / (lambda_c sigma_c),  sigma_c = 3 lambda_c^2 / (2 pi).
inline double single_photon_intensity(const LadderSystem& sys) {
  const double sigma = 3.0 * sys.lambda_control * sys.lambda_control /
                       (2.0 * kPi);
  return 2.0 * kPi * kHbar * kSpeedOfLight * sys.gamma2 /
         (sys.lambda_control * sigma);
}

// Per-photon saturation phase, written directly:
//   phi_pp = 2 pi^2 mu2^2 / (eps0 hbar gamma1 lambda_p lambda_c^2).
// Equals phi_max evaluated at single_photon_intensity (gamma2 cancels).
inline double phi_per_photon(const LadderSystem& sys) {
  return 2.0 * kPi * kPi * sys.mu2 * sys.mu2 /
         (kVacuumPermittivity * kHbar * sys.gamma1 * sys.lambda_probe *
          sys.lambda_control * sys.lambda_control);
}

}  // namespace xpm
