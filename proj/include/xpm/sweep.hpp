#pragma once

// Batch evaluation: optimizer curves versus optical depth and dense
// (delta1, delta2) landscape grids, packed into a simple table that the
// io layer serializes to CSV or JSON.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xpm/cavity.hpp"
#include "xpm/ladder.hpp"
#include "xpm/optimizer.hpp"

namespace xpm {

// One independent axis plus named value columns, row per axis sample.
struct SweepTable {
  std::string axis;
  std::vector<double> axis_values;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void validate() const {
    if (axis.empty()) throw std::invalid_argument("SweepTable: axis name empty");
    if (axis_values.size() != rows.size())
      throw std::invalid_argument("SweepTable: axis/row count mismatch");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
      if (!(axis_values[i - 1] < axis_values[i]))
        throw std::invalid_argument("SweepTable: axis must be strictly increasing");
    for (const auto& row : rows)
      if (row.size() != columns.size())
        throw std::invalid_argument("SweepTable: row width mismatch");
  }
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("linspace: need n >= 2");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("logspace: need 0 < lo < hi");
  std::vector<double> out = linspace(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  return out;
}

// Optimal single-pass response versus optical depth.
inline SweepTable sweep_f_vs_od(std::span<const double> od_samples) {
  SweepTable table;
  table.axis = "od";
  table.columns = {"f_max", "delta1_star", "delta2_star", "transmission"};
  for (double od : od_samples) {
    const ExtremumResult r = maximize_f(od);
    table.axis_values.push_back(od);
    table.rows.push_back(
        {r.value, r.location.delta1, r.location.delta2, r.transmission});
  }
  table.validate();
  return table;
}

// Far-detuned minimum branch versus optical depth.  Rows where the branch is
// absent carry branch_found = 0 and NaN values.
inline SweepTable sweep_min_vs_od(std::span<const double> od_samples) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SweepTable table;
  table.axis = "od";
  table.columns = {"abs_f_min", "delta1_bar", "delta2_bar", "transmission",
                   "branch_found"};
  for (double od : od_samples) {
    table.axis_values.push_back(od);
    if (auto r = find_far_detuned_min_f(od)) {
      table.rows.push_back({std::abs(r->value), r->location.delta1,
                            r->location.delta2, r->transmission, 1.0});
    } else {
      table.rows.push_back({nan, nan, nan, nan, 0.0});
    }
  }
  table.validate();
  return table;
}

enum class LandscapeFunction { single_pass_f, cavity_g };

// Dense rectangular landscape sample; rows walk delta1, columns walk delta2.
inline SweepTable contour_grid(LandscapeFunction fun, double od,
                               double reflectivity, double d1_lo, double d1_hi,
                               double d2_lo, double d2_hi,
                               std::size_t resolution) {
  if (resolution < 2)
    throw std::invalid_argument("contour_grid: resolution must be >= 2");
  if (!(d1_lo < d1_hi) || !(d2_lo < d2_hi))
    throw std::invalid_argument("contour_grid: empty range");
  if (!(od > 0.0))
    throw std::invalid_argument("contour_grid: od must be positive");
  if (fun == LandscapeFunction::cavity_g &&
      (!(reflectivity > 0.0) || !(reflectivity < 1.0)))
    throw std::invalid_argument("contour_grid: cavity_g needs reflectivity in (0, 1)");

  SweepTable table;
  table.axis = "delta1";
  table.axis_values = linspace(d1_lo, d1_hi, resolution);
  const std::vector<double> d2 = linspace(d2_lo, d2_hi, resolution);
  table.columns.reserve(resolution);
  for (double v : d2) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "d2=%.17g", v);
    table.columns.emplace_back(buf);
  }
  for (double d1 : table.axis_values) {
    std::vector<double> row;
    row.reserve(resolution);
    for (double v : d2) {
      const Detuning det{d1, v};
      row.push_back(fun == LandscapeFunction::single_pass_f
                        ? f_factor(det, od)
                        : g_factor(det, od, reflectivity));
    }
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

// Canned sweep definitions matching the standard plots.
inline SweepTable fig2_curves() {
  const std::vector<double> od = logspace(0.1, 100.0, 61);
  return sweep_f_vs_od(od);
}

inline SweepTable fig3_landscape() {
  return contour_grid(LandscapeFunction::single_pass_f, 100.0, 0.0, -10.0,
                      10.0, -3.0, 3.0, 201);
}

inline SweepTable fig4_min_branch() {
  const std::vector<double> od = logspace(10.0, 10000.0, 61);
  return sweep_min_vs_od(od);
}

// The g landscape at od = 1 for a given mirror; the interesting delta1 span
// scales with the asymptotic optimum.
inline SweepTable fig6_landscape(double reflectivity) {
  const double span = 3.0 * std::sqrt(finesse(reflectivity) / kPi);
  return contour_grid(LandscapeFunction::cavity_g, 1.0, reflectivity, -span,
                      span, -5.0, 5.0, 201);
}

}  // namespace xpm
