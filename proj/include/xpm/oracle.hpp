#pragma once

// Slow, literal reference implementations used to certify the closed forms:
// bounce-by-bounce summation of the cavity series with compensated
// accumulation, and brute-force grid extremum search.  Test-facing; nothing
// here is needed on the fast path.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "xpm/cavity.hpp"
#include "xpm/ladder.hpp"

namespace xpm::oracle {

// Neumaier-compensated accumulator; keeps O(eps) error over long sums.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

// Smallest n with q^n / (1 - q) < tol (geometric tail), capped.
inline std::size_t bounces_for_tail(double q, double tol,
                                    std::size_t cap = 5'000'000) {
  if (!(q >= 0.0) || !(q < 1.0))
    throw std::invalid_argument("bounces_for_tail: need 0 <= q < 1");
  if (q == 0.0) return 1;
  const double need = std::log(tol * (1.0 - q)) / std::log(q);
  if (!(need > 0.0)) return 1;
  if (need >= static_cast<double>(cap)) return cap;
  return static_cast<std::size_t>(std::ceil(need));
}

// Transmitted amplitude as an explicit sum of the first n bounces,
//   A_t^(n) = (1-R) e^{i(delta+phi1)} sum_{k<n} [R e^{i(2 delta+phi1+phi2)}]^k.
struct BounceTrace {
  std::vector<std::complex<double>> terms;
  std::complex<double> partial_sum;
  std::size_t bounce_count = 0;
  double truncation_bound = 0.0;  // |A_t - partial_sum| <= this
};

inline BounceTrace finite_bounce_sum(double reflectivity,
                                     std::complex<double> propagation_phase,
                                     const PassPhases& ph,
                                     std::size_t n_bounces,
                                     bool keep_terms = false) {
  if (!(reflectivity >= 0.0) || !(reflectivity < 1.0))
    throw std::invalid_argument("finite_bounce_sum: reflectivity must be in [0, 1)");
  if (n_bounces == 0)
    throw std::invalid_argument("finite_bounce_sum: need at least one bounce");
  const std::complex<double> i{0.0, 1.0};
  const double R = reflectivity;
  const std::complex<double> ratio =
      R * std::exp(i * (2.0 * propagation_phase + ph.phi1 + ph.phi2));
  const double r = std::abs(ratio);

  BounceTrace trace;
  trace.bounce_count = n_bounces;
  if (keep_terms) trace.terms.reserve(n_bounces);

  std::complex<double> term =
      (1.0 - R) * std::exp(i * (propagation_phase + ph.phi1));
  CompensatedComplexSum acc;
  for (std::size_t k = 0; k < n_bounces; ++k) {
    acc.add(term);
    if (keep_terms) trace.terms.push_back(term);
    term *= ratio;
  }
  trace.partial_sum = acc.value();
  trace.truncation_bound =
      r < 1.0 ? std::pow(r, static_cast<double>(n_bounces)) * (1.0 - R) / (1.0 - r)
              : std::numeric_limits<double>::infinity();
  return trace;
}

// Intracavity control intensities from the buildup series, with the field
// sampled at the cell midpoint (half-pass absorption e^{-x/4} on the way in):
//   A_r = sqrt(1-R) e^{i k_c L / 2} e^{-x/4} sum_k [R e^{-x} e^{i 2 k_c L}]^k,
//   A_l = A_r sqrt(R) e^{-x/2} e^{i k_c L}.
struct BuildupTrace {
  double rightward = 0.0;
  double leftward = 0.0;
  std::size_t bounce_count = 0;
  double tail_bound = 0.0;  // relative amplitude tail q^n/(1-q)
};

inline BuildupTrace intracavity_buildup_sum(double reflectivity, double x,
                                            double roundtrip_phase,
                                            std::size_t n_bounces) {
  if (!(reflectivity >= 0.0) || !(reflectivity < 1.0))
    throw std::invalid_argument("intracavity_buildup_sum: reflectivity must be in [0, 1)");
  if (n_bounces == 0)
    throw std::invalid_argument("intracavity_buildup_sum: need at least one bounce");
  const std::complex<double> i{0.0, 1.0};
  const double R = reflectivity;
  const std::complex<double> ratio =
      R * std::exp(-x) * std::exp(i * 2.0 * roundtrip_phase);
  const double q = std::abs(ratio);

  std::complex<double> term = std::sqrt(1.0 - R) *
                              std::exp(i * (0.5 * roundtrip_phase)) *
                              std::exp(-0.25 * x);
  CompensatedComplexSum acc;
  for (std::size_t k = 0; k < n_bounces; ++k) {
    acc.add(term);
    term *= ratio;
  }
  const std::complex<double> a_r = acc.value();
  const std::complex<double> a_l =
      a_r * std::sqrt(R) * std::exp(-0.5 * x) * std::exp(i * roundtrip_phase);

  BuildupTrace trace;
  trace.rightward = std::norm(a_r);
  trace.leftward = std::norm(a_l);
  trace.bounce_count = n_bounces;
  trace.tail_bound = q < 1.0
                         ? std::pow(q, static_cast<double>(n_bounces)) / (1.0 - q)
                         : std::numeric_limits<double>::infinity();
  return trace;
}

// Brute-force argmax/argmin over a dense rectangular grid.  Strict comparison
// plus row-major scan order gives a lexicographic (delta1, delta2) tie-break.
struct GridExtremum {
  Detuning location{};
  double value = 0.0;
  double spacing1 = 0.0;
  double spacing2 = 0.0;
};

template <typename Fn>
GridExtremum dense_grid_extremum(Fn&& fun, double d1_lo, double d1_hi,
                                 double d2_lo, double d2_hi,
                                 std::size_t resolution, bool find_max) {
  if (resolution < 2)
    throw std::invalid_argument("dense_grid_extremum: resolution must be >= 2");
  if (!(d1_lo < d1_hi) || !(d2_lo < d2_hi))
    throw std::invalid_argument("dense_grid_extremum: empty box");

  const double h1 = (d1_hi - d1_lo) / static_cast<double>(resolution - 1);
  const double h2 = (d2_hi - d2_lo) / static_cast<double>(resolution - 1);
  GridExtremum best;
  bool first = true;
  for (std::size_t i = 0; i < resolution; ++i) {
    const double d1 = d1_lo + h1 * static_cast<double>(i);
    for (std::size_t j = 0; j < resolution; ++j) {
      const double d2 = d2_lo + h2 * static_cast<double>(j);
      const double v = fun(Detuning{d1, d2});
      const bool better = first || (find_max ? v > best.value : v < best.value);
      if (better) {
        best.location = Detuning{d1, d2};
        best.value = v;
        first = false;
      }
    }
  }
  best.spacing1 = h1;
  best.spacing2 = h2;
  return best;
}

}  // namespace xpm::oracle
