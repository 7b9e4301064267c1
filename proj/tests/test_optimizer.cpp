#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <optional>

#include "xpm/cavity.hpp"
#include "xpm/ladder.hpp"
#include "xpm/optimizer.hpp"
#include "xpm/oracle.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("maximize_f reference optima", "[optimizer]") {
  struct Ref {
    double od, value, d1, d2, t;
  };
  // independently computed via the stationary-point reduction
  // d2 = (1-d1)/(1+d1) and 1-d Brent refinement
  const Ref refs[] = {
      {1.0, 0.495615452810, 0.504188468088, 0.329620617649, 0.450536051363},
      {10.0, 0.994131754849, 0.949195256964, 0.026064470891, 0.005192875140},
      {15.0, 0.999463140753, 0.992203400678, 0.003913555875, 0.000521551550},
      {100.0, 1.0, 1.0, 0.0, 0.0},
  };
  for (const Ref& ref : refs) {
    const xpm::ExtremumResult r = xpm::maximize_f(ref.od);
    CAPTURE(ref.od);
    CHECK_THAT(r.value, WithinRel(ref.value, 1e-9));
    CHECK_THAT(r.location.delta1, WithinAbs(ref.d1, 1e-5));
    CHECK_THAT(r.location.delta2, WithinAbs(ref.d2, 1e-5));
    CHECK_THAT(r.transmission, WithinRel(ref.t, 1e-6) || WithinAbs(ref.t, 1e-12));
    CHECK(r.kind == xpm::ExtremumKind::global_max);
    CHECK(r.converged);
    CHECK(r.gradient_norm < 1e-6);
    // interior stationarity: the optimal d2 at fixed d1 has a closed form
    CHECK_THAT(r.location.delta2,
               WithinAbs((1.0 - r.location.delta1) / (1.0 + r.location.delta1),
                         1e-6));
    // transmission is reported at the optimum
    CHECK_THAT(r.transmission,
               WithinRel(xpm::transmission_single_pass(ref.od,
                                                       r.location.delta1),
                         1e-12));
  }
  CHECK_THROWS_AS(xpm::maximize_f(0.0), std::invalid_argument);
  CHECK_THROWS_AS(xpm::maximize_f(-3.0), std::invalid_argument);
}

TEST_CASE("maximize_f agrees with the dense-grid oracle", "[optimizer]") {
  for (double od : {1.0, 10.0, 100.0}) {
    CAPTURE(od);
    const xpm::ExtremumResult opt = xpm::maximize_f(od);
    const xpm::oracle::GridExtremum grid = xpm::oracle::dense_grid_extremum(
        [od](const xpm::Detuning& det) { return xpm::f_factor(det, od); },
        1e-3, 3.0, -1.5, 1.5, 4001, /*find_max=*/true);
    CHECK(grid.value <= opt.value + 1e-12);
    CHECK(std::abs(opt.value - grid.value) <= 1e-6);
    CHECK(std::abs(opt.location.delta1 - grid.location.delta1) <=
          grid.spacing1);
    CHECK(std::abs(opt.location.delta2 - grid.location.delta2) <=
          grid.spacing2);
  }
}

TEST_CASE("negated partner mirrors the landscape", "[optimizer]") {
  const xpm::ExtremumResult best = xpm::maximize_f(10.0);
  const xpm::ExtremumResult mirror = xpm::negated(best);
  CHECK(mirror.value == -best.value);
  CHECK(mirror.location.delta1 == -best.location.delta1);
  CHECK(mirror.location.delta2 == -best.location.delta2);
  CHECK(mirror.kind == xpm::ExtremumKind::global_min);
  CHECK_THAT(xpm::f_factor(mirror.location, 10.0),
             WithinRel(mirror.value, 1e-12));
  CHECK(xpm::negated(mirror).kind == xpm::ExtremumKind::global_max);
}

TEST_CASE("far-detuned minimum branch", "[optimizer]") {
  const std::optional<xpm::ExtremumResult> deep =
      xpm::find_far_detuned_min_f(100.0);
  REQUIRE(deep.has_value());
  CHECK_THAT(deep->value, WithinRel(-0.315649729756, 1e-9));
  CHECK_THAT(deep->location.delta1, WithinAbs(6.230812902240, 1e-4));
  CHECK_THAT(deep->location.delta2, WithinAbs(1.382349748955, 1e-4));
  CHECK_THAT(deep->transmission, WithinRel(0.081178096655, 1e-6));
  CHECK(deep->kind == xpm::ExtremumKind::local_min);
  CHECK(deep->converged);
  // stationarity along d2 on the same-sign branch: d2 = (1+d1)/(d1-1)
  CHECK_THAT(deep->location.delta2,
             WithinAbs((1.0 + deep->location.delta1) /
                           (deep->location.delta1 - 1.0),
                       1e-5));

  const std::optional<xpm::ExtremumResult> deeper =
      xpm::find_far_detuned_min_f(10000.0);
  REQUIRE(deeper.has_value());
  CHECK_THAT(deeper->value, WithinRel(-0.474615056006, 1e-9));
  CHECK_THAT(deeper->location.delta1, WithinAbs(42.994891577257, 1e-3));
  CHECK_THAT(deeper->location.delta2, WithinAbs(1.047624840186, 1e-4));

  // vanishing depth: the branch value scales away below the detection floor
  CHECK_FALSE(xpm::find_far_detuned_min_f(1e-4).has_value());
  CHECK_THROWS_AS(xpm::find_far_detuned_min_f(0.0), std::invalid_argument);
}

TEST_CASE("maximize_g reference optima", "[optimizer]") {
  struct Ref {
    double od, R, value, d1, d2, t;
  };
  const Ref refs[] = {
      {1.0, 0.99, 29.875869595216946, 9.1337389833120820, -0.80263947953528938,
       0.21069387738828620},
      {0.1, 0.999, 301.61103240606755, 9.1029779271344476, -0.80203856581449853,
       0.20815892766600119},
      {1.0, 0.999, 265.77451414054862, 30.663280556580085, -0.93683535108037404,
       0.23521467986069721},
      {10.0, 0.999, 254.76821579086173, 99.035967227258095, -0.98000719085909898,
       0.24532908952983431},
      {1.0, 0.999999, 250499.99887365751, 999.00125099942099,
       -0.99800000250199571, 0.24950100087349679},
  };
  for (const Ref& ref : refs) {
    CAPTURE(ref.od, ref.R);
    const xpm::ExtremumResult r = xpm::maximize_g(ref.od, ref.R);
    CHECK_THAT(r.value, WithinRel(ref.value, 1e-9));
    CHECK_THAT(r.location.delta1, WithinRel(ref.d1, 1e-4));
    CHECK_THAT(r.location.delta2, WithinAbs(ref.d2, 1e-4));
    CHECK_THAT(r.transmission, WithinRel(ref.t, 1e-6));
    CHECK(r.converged);
    CHECK(r.gradient_norm < 1e-6);
    // d2 stationarity closed form holds for g as well
    CHECK_THAT(r.location.delta2,
               WithinAbs((1.0 - r.location.delta1) / (1.0 + r.location.delta1),
                         1e-4));
    CHECK_THAT(r.transmission,
               WithinRel(xpm::control_transmission_peak(
                             ref.R, xpm::od_detuned(ref.od, r.location.delta1)),
                         1e-12));
  }
  CHECK_THROWS_AS(xpm::maximize_g(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(xpm::maximize_g(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(xpm::maximize_g(0.0, 0.99), std::invalid_argument);
}

TEST_CASE("maximize_g approaches the asymptotic scale as R -> 1", "[optimizer]") {
  // The fractional overshoot of g over F/(4 pi) tracks 2/delta1* closely.
  const double od = 1.0;
  double prev_dev = 1e9;
  for (double R : {0.99, 0.999, 0.9999, 0.999999}) {
    CAPTURE(R);
    const xpm::ExtremumResult r = xpm::maximize_g(od, R);
    const xpm::AsymptoticPeak peak = xpm::g_max_asymptotic(od, R);
    const double dev = r.value / peak.g - 1.0;
    CHECK(dev > 0.0);
    CHECK(dev < prev_dev);
    CHECK_THAT(dev, WithinRel(2.0 / peak.location.delta1, 0.05));
    prev_dev = dev;
  }
  // at the sharpest mirror the optimum is within 0.3% of F/(4 pi)
  CHECK(prev_dev < 0.003);
}

TEST_CASE("optimizers are deterministic", "[optimizer]") {
  const xpm::ExtremumResult a = xpm::maximize_f(7.0);
  const xpm::ExtremumResult b = xpm::maximize_f(7.0);
  CHECK(a.value == b.value);
  CHECK(a.location.delta1 == b.location.delta1);
  CHECK(a.location.delta2 == b.location.delta2);
  CHECK(a.gradient_norm == b.gradient_norm);

  const xpm::ExtremumResult c = xpm::maximize_g(2.0, 0.995);
  const xpm::ExtremumResult d = xpm::maximize_g(2.0, 0.995);
  CHECK(c.value == d.value);
  CHECK(c.location.delta1 == d.location.delta1);
  CHECK(c.location.delta2 == d.location.delta2);
}
