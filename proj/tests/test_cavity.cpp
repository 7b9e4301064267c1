#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "xpm/cavity.hpp"
#include "xpm/ladder.hpp"
#include "xpm/preset.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>{}(rng);
}

}  // namespace

TEST_CASE("finesse values and monotonicity", "[cavity]") {
  CHECK_THAT(xpm::finesse(0.99), WithinRel(312.58452228282908, 1e-12));
  CHECK_THAT(xpm::finesse(0.999), WithinRel(3140.0214643674417, 1e-12));
  CHECK_THAT(xpm::finesse(0.999999), WithinRel(3141591.0827027354, 1e-12));
  CHECK(xpm::finesse(0.0) == 0.0);
  CHECK_THROWS_AS(xpm::finesse(1.0), std::invalid_argument);
  CHECK_THROWS_AS(xpm::finesse(-0.1), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const double a = urand(rng, 0.0, 0.9999);
    const double b = urand(rng, 0.0, 0.9999);
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (lo == hi) continue;
    REQUIRE(xpm::finesse(lo) < xpm::finesse(hi));
  }
}

TEST_CASE("output amplitude reproduces the Airy profile", "[cavity]") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.0, 0.999);
    const double delta = urand(rng, 0.0, 2.0 * xpm::kPi);
    const xpm::CavityConfig cfg{R, 0.01, delta};
    const std::complex<double> a =
        xpm::output_amplitude(cfg, {delta, 0.0}, {0.0, 0.0});
    REQUIRE_THAT(std::norm(a),
                 WithinRel(xpm::control_transmission(cfg, 0.0), 1e-12));
  }
}

TEST_CASE("output amplitude rejects a diverging series", "[cavity]") {
  const xpm::CavityConfig cfg{0.9, 0.01, 0.0};
  // gain medium: negative imaginary propagation phase inflates the round trip
  const std::complex<double> gain{0.3, -0.5 * std::log(1.0 / 0.9) - 0.1};
  CHECK_THROWS_AS(xpm::output_amplitude(cfg, gain, {0.0, 0.0}),
                  std::domain_error);
  CHECK_NOTHROW(xpm::output_amplitude(cfg, {0.3, 0.0}, {0.0, 0.0}));
}

TEST_CASE("exact cavity phase matches the transmitted argument", "[cavity]") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.0, 0.999);
    const xpm::CavityConfig cfg{R, 0.01, 0.0};
    const xpm::PassPhases ph{urand(rng, -0.3, 0.3), urand(rng, -0.3, 0.3)};
    const double direct =
        std::arg(xpm::output_amplitude(cfg, {0.0, 0.0}, ph));
    REQUIRE_THAT(xpm::phi_cavity_exact(cfg, ph),
                 WithinAbs(direct, 1e-13));
  }
}

TEST_CASE("linear cavity phase is the small-phase limit", "[cavity]") {
  const xpm::CavityConfig cfg{0.99, 0.01, 0.0};
  const xpm::PassPhases ph{0.01, 0.02};
  CHECK_THAT(xpm::phi_cavity_linear(cfg, ph),
             WithinRel((0.01 + 0.99 * 0.02) / 0.01, 1e-12));

  // halving the pass phases shrinks the linearization error at least 4x
  // (the expansion parameter is theta/(1-R), so stay well inside that regime)
  std::mt19937_64 rng(14);
  for (int k = 0; k < 500; ++k) {
    const double R = urand(rng, 0.5, 0.999);
    const xpm::CavityConfig c{R, 0.01, 0.0};
    const double p1 = urand(rng, 0.02, 0.1) * (1.0 - R);
    const double p2 = urand(rng, 0.02, 0.1) * (1.0 - R);
    auto err = [&](double scale) {
      const xpm::PassPhases p{p1 * scale, p2 * scale};
      return std::abs(xpm::phi_cavity_exact(c, p) -
                      xpm::phi_cavity_linear(c, p));
    };
    const double e1 = err(1.0);
    const double e2 = err(0.5);
    if (e2 < 1e-12) continue;  // below noise, ratio meaningless
    REQUIRE(e1 >= 3.9 * e2);
  }
}

TEST_CASE("intracavity buildup on resonance", "[cavity]") {
  const xpm::CavityConfig cfg{0.99, 0.01, 0.0};
  const xpm::IntracavityIntensity intra = xpm::intracavity_intensities(cfg, 0.0);
  CHECK_THAT(intra.rightward, WithinRel(100.0, 1e-12));
  CHECK_THAT(intra.leftward, WithinRel(99.0, 1e-12));

  std::mt19937_64 rng(15);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.0, 0.9999);
    const double x = urand(rng, 0.0, 5.0);
    const double kcl = urand(rng, 0.0, 2.0 * xpm::kPi);
    const xpm::CavityConfig c{R, 0.01, kcl};
    const xpm::IntracavityIntensity v = xpm::intracavity_intensities(c, x);
    REQUIRE(v.rightward >= 0.0);
    REQUIRE_THAT(v.leftward, WithinRel(R * std::exp(-x) * v.rightward, 1e-14) ||
                                 WithinAbs(0.0, 1e-300));
  }
}

TEST_CASE("alpha buildup factor identities", "[cavity]") {
  // alpha(0, R) = 2 R / (1-R)^2 = 2 F^2 / pi^2
  std::mt19937_64 rng(16);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.0, 0.9999);
    const double F = xpm::finesse(R);
    REQUIRE_THAT(xpm::alpha_factor(0.0, R),
                 WithinRel(2.0 * F * F / (xpm::kPi * xpm::kPi), 1e-12) ||
                     WithinAbs(0.0, 1e-300));
    // strictly decreasing in x for R > 0
    if (R > 0.0) {
      const double x1 = urand(rng, 0.0, 4.0);
      const double x2 = x1 + urand(rng, 1e-3, 2.0);
      REQUIRE(xpm::alpha_factor(x2, R) < xpm::alpha_factor(x1, R));
    }
  }
  CHECK_THAT(xpm::alpha_factor(0.0, 0.99), WithinRel(19800.0, 1e-12));
}

TEST_CASE("g equals alpha times f, two independent code paths", "[cavity]") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 2000; ++k) {
    const double d1 = urand(rng, -20.0, 20.0);
    const double d2 = urand(rng, -20.0, 20.0);
    const double od = std::exp(urand(rng, std::log(1e-3), std::log(1e3)));
    const double R = urand(rng, 0.0, 0.9999);
    const xpm::Detuning det{d1, d2};
    const double direct = xpm::g_factor(det, od, R);
    const double composed =
        xpm::alpha_factor(xpm::od_detuned(od, d1), R) * xpm::f_factor(det, od);
    REQUIRE_THAT(direct, WithinRel(composed, 1e-12) ||
                             WithinAbs(composed, 1e-300));
  }
}

TEST_CASE("asymptotic peak scale and validity flags", "[cavity]") {
  const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(1.0, 0.999);
  CHECK_THAT(peak.g, WithinRel(249.8749687344, 1e-10));
  CHECK_THAT(peak.location.delta1,
             WithinRel(std::sqrt(xpm::finesse(0.999) / xpm::kPi), 1e-12));
  CHECK(peak.location.delta2 == -1.0);
  CHECK(peak.within_validity);

  const xpm::AsymptoticPeak weak = xpm::g_max_asymptotic(0.001, 0.9);
  CHECK_FALSE(weak.within_validity);
  CHECK(weak.finesse_margin < 10.0);
  CHECK_THROWS_AS(xpm::g_max_asymptotic(-1.0, 0.999), std::invalid_argument);
}

TEST_CASE("control transmission: Airy form and loaded cavity depth", "[cavity]") {
  std::mt19937_64 rng(18);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.0, 0.9999);
    const double kcl = urand(rng, 0.0, 2.0 * xpm::kPi);
    const xpm::CavityConfig cfg{R, 0.01, kcl};
    // empty cavity: T = 1 / (1 + (2F/pi)^2 sin^2(kcl))
    const double F = xpm::finesse(R);
    const double s = std::sin(kcl);
    const double airy =
        1.0 / (1.0 + 4.0 * F * F / (xpm::kPi * xpm::kPi) * s * s);
    REQUIRE_THAT(xpm::control_transmission(cfg, 0.0), WithinRel(airy, 1e-12));

    const double x = urand(rng, 0.0, 5.0);
    // peak transmission = transmission at kcl = 0
    const xpm::CavityConfig tuned{R, 0.01, 0.0};
    REQUIRE_THAT(xpm::control_transmission_peak(R, x),
                 WithinRel(xpm::control_transmission(tuned, x), 1e-12));
    // OD_C = -ln of the peak transmission, and the cavity only adds loss
    REQUIRE_THAT(xpm::od_cavity(R, x),
                 WithinRel(-std::log(xpm::control_transmission_peak(R, x)),
                           1e-12) ||
                     WithinAbs(0.0, 1e-12));
    REQUIRE(xpm::od_cavity(R, x) >= x - 1e-12);
  }
  CHECK_THAT(xpm::od_cavity(0.0, 1.7), WithinRel(1.7, 1e-15));
}

TEST_CASE("transmission tradeoff scaling laws", "[cavity]") {
  const double od = 1.0;
  const double R = 0.999;
  const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(od, R);
  for (double eps : {0.01, 0.05, 0.1, 0.5}) {
    const xpm::TradeoffPoint pt = xpm::transmission_tradeoff(eps, od, R);
    CHECK_THAT(pt.gain / peak.g, WithinRel(2.0 * eps, 1e-12));
    CHECK_THAT(pt.delta1 / peak.location.delta1,
               WithinRel(std::sqrt(2.0 / eps), 1e-12));
    CHECK_THAT(pt.detuned_od, WithinRel(0.5 * (1.0 - R) * eps, 1e-12));
    CHECK(pt.epsilon_small == (eps <= 0.1));
  }
  CHECK_THROWS_AS(xpm::transmission_tradeoff(0.0, od, R), std::invalid_argument);
  CHECK_THROWS_AS(xpm::transmission_tradeoff(1.0, od, R), std::invalid_argument);
  CHECK_THROWS_AS(xpm::transmission_tradeoff(0.1, -1.0, R),
                  std::invalid_argument);
}

TEST_CASE("eta identities", "[cavity]") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 1000; ++k) {
    const double R = urand(rng, 0.1, 0.9999);
    const double F = xpm::finesse(R);
    const double lambda = urand(rng, 3e-7, 2e-6);
    const double sigma = 3.0 * lambda * lambda / (2.0 * xpm::kPi);
    const double area = std::exp(urand(rng, std::log(1e-12), std::log(1e-6)));
    const double density = std::exp(urand(rng, std::log(1e12), std::log(1e20)));
    const double length = urand(rng, 1e-4, 0.1);
    const double od = density * sigma * length;
    const double eta = xpm::eta_on_resonance({area, sigma}, F);
    // column of N A d / 2 atoms at delta1 = 0 gives eta_eff
    REQUIRE_THAT(xpm::eta_effective(od, 0.0, F),
                 WithinRel(0.5 * density * area * length * eta, 1e-12));
    const double d1 = urand(rng, -10.0, 10.0);
    REQUIRE_THAT(xpm::eta_effective(od, d1, F),
                 WithinRel(xpm::eta_effective(od, 0.0, F) / (1.0 + d1 * d1),
                           1e-12));
  }
}

TEST_CASE("cavity bandwidth check for the Rb cell", "[cavity]") {
  const xpm::LadderSystem sys = xpm::rb_preset();
  const xpm::BandwidthCheck ok =
      xpm::cavity_bandwidth_check(sys, {0.99, 0.01, 0.0});
  CHECK_THAT(ok.cavity_scale, WithinRel(3.125845222828291, 1e-12));
  CHECK_THAT(ok.atomic_scale, WithinRel(3.9761209660307855, 1e-12));
  CHECK_THAT(ok.margin, WithinRel(0.7861544579587343, 1e-12));
  CHECK(ok.ok);

  const xpm::BandwidthCheck bad =
      xpm::cavity_bandwidth_check(sys, {0.999, 0.01, 0.0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.margin > 1.0);
}

TEST_CASE("config validation", "[cavity]") {
  CHECK_THROWS_AS((xpm::CavityConfig{1.0, 0.01, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((xpm::CavityConfig{-0.1, 0.01, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((xpm::CavityConfig{0.9, 0.0, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((xpm::CavityConfig{0.0, 0.01, 0.0}.validate()));
  CHECK_THROWS_AS((xpm::CooperativityContext{0.0, 1e-13}.validate()),
                  std::invalid_argument);

  CHECK(xpm::PassPhases{0.1, -0.1}.within_linear_regime());
  CHECK_FALSE(xpm::PassPhases{0.11, 0.0}.within_linear_regime());
}
