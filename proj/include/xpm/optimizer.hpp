#pragma once

// Deterministic extremum search over the detuning landscape: coarse grid scan
// (log-spaced in delta1, linear in delta2) followed by successive grid-shrink
// refinement around the incumbent.  No randomness, no tolerance on inputs ->
// bit-identical results for identical inputs.

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "xpm/cavity.hpp"
#include "xpm/ladder.hpp"

namespace xpm {

enum class ExtremumKind { global_max, global_min, local_max, local_min };

inline std::string_view to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::global_max: return "global max";
    case ExtremumKind::global_min: return "global min";
    case ExtremumKind::local_max: return "local max";
    case ExtremumKind::local_min: return "local min";
  }
  return "?";
}

struct ExtremumResult {
  Detuning location{};
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::global_max;
  double transmission = 0.0;   // control transmission at the extremum
  double gradient_norm = 0.0;  // relative finite-difference gradient
  bool converged = false;
};

// Antisymmetry partner: the landscape maps (d1,d2) -> (-d1,-d2) with f -> -f,
// so every reported extremum has a mirrored twin.
inline ExtremumResult negated(const ExtremumResult& r) {
  ExtremumResult out = r;
  out.location = Detuning{-r.location.delta1, -r.location.delta2};
  out.value = -r.value;
  switch (r.kind) {
    case ExtremumKind::global_max: out.kind = ExtremumKind::global_min; break;
    case ExtremumKind::global_min: out.kind = ExtremumKind::global_max; break;
    case ExtremumKind::local_max: out.kind = ExtremumKind::local_min; break;
    case ExtremumKind::local_min: out.kind = ExtremumKind::local_max; break;
  }
  return out;
}

namespace detail {

struct SearchBox {
  double d1_lo, d1_hi;  // d1_lo > 0; scanned log-spaced
  double d2_lo, d2_hi;  // scanned linearly
};

struct GridPoint {
  Detuning det{};
  double value = 0.0;
  std::size_t i1 = 0, i2 = 0;  // coarse grid indices
};

// Coarse scan: n1 log-spaced delta1 values, n2 linear delta2 values.
template <typename Fn>
GridPoint coarse_scan(Fn&& fun, const SearchBox& box, std::size_t n1,
                      std::size_t n2) {
  const double l_lo = std::log(box.d1_lo);
  const double l_hi = std::log(box.d1_hi);
  GridPoint best;
  bool first = true;
  for (std::size_t i = 0; i < n1; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n1 - 1);
    const double d1 = std::exp(l_lo + (l_hi - l_lo) * t);
    for (std::size_t j = 0; j < n2; ++j) {
      const double u = static_cast<double>(j) / static_cast<double>(n2 - 1);
      const double d2 = box.d2_lo + (box.d2_hi - box.d2_lo) * u;
      const double v = fun(Detuning{d1, d2});
      if (first || v > best.value) {
        best = GridPoint{Detuning{d1, d2}, v, i, j};
        first = false;
      }
    }
  }
  return best;
}

// Local refinement: 17x17 linear grid around the incumbent, half-widths
// shrunk by 4x per round, until the cell size drops below 1e-9 relative to
// the coordinate scale.  The 2x margin between the shrink factor and the
// grid pitch keeps the true extremum inside the next window.
template <typename Fn>
GridPoint refine(Fn&& fun, GridPoint incumbent, const SearchBox& box,
                 double h1, double h2) {
  constexpr std::size_t kLocal = 17;
  constexpr double kShrink = 0.25;
  constexpr double kRelCell = 1e-9;

  auto rel_scale = [](double v) { return std::max(1.0, std::abs(v)); };
  while (h1 > kRelCell * rel_scale(incumbent.det.delta1) ||
         h2 > kRelCell * rel_scale(incumbent.det.delta2)) {
    const double a_lo = std::max(box.d1_lo, incumbent.det.delta1 - h1);
    const double a_hi = std::min(box.d1_hi, incumbent.det.delta1 + h1);
    const double b_lo = std::max(box.d2_lo, incumbent.det.delta2 - h2);
    const double b_hi = std::min(box.d2_hi, incumbent.det.delta2 + h2);
    GridPoint best = incumbent;
    for (std::size_t i = 0; i < kLocal; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(kLocal - 1);
      const double d1 = a_lo + (a_hi - a_lo) * t;
      for (std::size_t j = 0; j < kLocal; ++j) {
        const double u = static_cast<double>(j) / static_cast<double>(kLocal - 1);
        const double d2 = b_lo + (b_hi - b_lo) * u;
        const double v = fun(Detuning{d1, d2});
        if (v > best.value) best = GridPoint{Detuning{d1, d2}, v, 0, 0};
      }
    }
    incumbent = best;
    h1 *= kShrink;
    h2 *= kShrink;
  }
  return incumbent;
}

// Relative central-difference gradient norm at the candidate.
template <typename Fn>
double relative_gradient(Fn&& fun, const Detuning& det, double value) {
  auto rel_scale = [](double v) { return std::max(1.0, std::abs(v)); };
  const double s1 = rel_scale(det.delta1);
  const double s2 = rel_scale(det.delta2);
  const double t1 = 1e-6 * s1;
  const double t2 = 1e-6 * s2;
  const double g1 = (fun(Detuning{det.delta1 + t1, det.delta2}) -
                     fun(Detuning{det.delta1 - t1, det.delta2})) /
                    (2.0 * t1);
  const double g2 = (fun(Detuning{det.delta1, det.delta2 + t2}) -
                     fun(Detuning{det.delta1, det.delta2 - t2})) /
                    (2.0 * t2);
  const double scale = std::max(std::abs(value), 1e-300);
  return std::hypot(g1 * s1, g2 * s2) / scale;
}

// Local spacing of the coarse grid near index i (log axis) / anywhere (linear).
inline double log_spacing(const SearchBox& box, std::size_t n1, double d1) {
  const double step = std::log(box.d1_hi / box.d1_lo) /
                      static_cast<double>(n1 - 1);
  return d1 * std::expm1(step);
}

template <typename Fn>
GridPoint maximize_in_box(Fn&& fun, const SearchBox& box, std::size_t n1,
                          std::size_t n2) {
  GridPoint coarse = coarse_scan(fun, box, n1, n2);
  const double h1 = 2.0 * log_spacing(box, n1, coarse.det.delta1);
  const double h2 = 2.0 * (box.d2_hi - box.d2_lo) / static_cast<double>(n2 - 1);
  return refine(fun, coarse, box, h1, h2);
}

constexpr std::size_t kCoarseN1 = 240;
constexpr std::size_t kCoarseN2 = 101;
constexpr double kGradientTol = 1e-6;

}  // namespace detail

// Positive-delta1 global maximum of f at fixed od (the negated partner covers
// the mirrored branch).
inline ExtremumResult maximize_f(double od) {
  if (!(od > 0.0) || !std::isfinite(od))
    throw std::invalid_argument("maximize_f: od must be positive and finite");
  auto fun = [od](const Detuning& det) { return f_factor(det, od); };
  const detail::SearchBox box{1e-2, 1e3, -5.0, 5.0};
  const detail::GridPoint best =
      detail::maximize_in_box(fun, box, detail::kCoarseN1, detail::kCoarseN2);

  ExtremumResult res;
  res.location = best.det;
  res.value = best.value;
  res.kind = ExtremumKind::global_max;
  res.transmission = transmission_single_pass(od, best.det.delta1);
  res.gradient_norm = detail::relative_gradient(fun, best.det, best.value);
  res.converged = res.gradient_norm < detail::kGradientTol;
  return res;
}

// Far-detuned local minimum of f on the delta1 > 0, delta2 > 0 quadrant
// (both detunings same sign, away from the global extrema).  Returns nothing
// when no interior minimum below -1e-4 exists inside the search box.
inline std::optional<ExtremumResult> find_far_detuned_min_f(double od) {
  if (!(od > 0.0) || !std::isfinite(od))
    throw std::invalid_argument("find_far_detuned_min_f: od must be positive and finite");
  auto neg = [od](const Detuning& det) { return -f_factor(det, od); };
  const detail::SearchBox box{1e-2, 1e3, 1e-3, 5.0};
  const detail::GridPoint best =
      detail::maximize_in_box(neg, box, detail::kCoarseN1, detail::kCoarseN2);

  // Interior check: a minimum pressed against the box is not a real branch.
  const double margin1 = detail::log_spacing(box, detail::kCoarseN1,
                                             best.det.delta1);
  const double margin2 = (box.d2_hi - box.d2_lo) /
                         static_cast<double>(detail::kCoarseN2 - 1);
  const bool interior = best.det.delta1 > box.d1_lo + margin1 &&
                        best.det.delta1 < box.d1_hi - margin1 &&
                        best.det.delta2 > box.d2_lo + margin2 &&
                        best.det.delta2 < box.d2_hi - margin2;
  const double value = -best.value;
  if (!interior || !(value < -1e-4)) return std::nullopt;

  ExtremumResult res;
  res.location = best.det;
  res.value = value;
  res.kind = ExtremumKind::local_min;
  res.transmission = transmission_single_pass(od, best.det.delta1);
  res.gradient_norm = detail::relative_gradient(neg, best.det, best.value);
  res.converged = res.gradient_norm < detail::kGradientTol;
  return res;
}

// Positive-delta1 global maximum of the cavity-enhanced response g.
inline ExtremumResult maximize_g(double od, double reflectivity) {
  if (!(od > 0.0) || !std::isfinite(od))
    throw std::invalid_argument("maximize_g: od must be positive and finite");
  if (!(reflectivity > 0.0) || !(reflectivity < 1.0))
    throw std::invalid_argument("maximize_g: reflectivity must be in (0, 1); R = 0 has no cavity");
  auto fun = [od, reflectivity](const Detuning& det) {
    return g_factor(det, od, reflectivity);
  };
  const double F = finesse(reflectivity);
  const double d1_hi = 10.0 * std::sqrt(od * F / kPi) + 10.0;
  const detail::SearchBox box{1e-2, d1_hi, -5.0, 5.0};
  const detail::GridPoint best =
      detail::maximize_in_box(fun, box, detail::kCoarseN1, detail::kCoarseN2);

  ExtremumResult res;
  res.location = best.det;
  res.value = best.value;
  res.kind = ExtremumKind::global_max;
  res.transmission = control_transmission_peak(
      reflectivity, od_detuned(od, best.det.delta1));
  res.gradient_norm = detail::relative_gradient(fun, best.det, best.value);
  res.converged = res.gradient_norm < detail::kGradientTol;
  return res;
}

}  // namespace xpm
