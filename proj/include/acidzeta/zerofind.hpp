#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "acidzeta/core.hpp"
#include "acidzeta/counting.hpp"
#include "acidzeta/zeroset.hpp"

namespace acidzeta {
namespace detail {

inline double bisect_zero(double a, double b, double za, HalfLineCache& cache) {
  for (int it = 0; it < 64 && b - a > 1e-10; ++it) {
    const double m = 0.5 * (a + b);
    const double zm = (cis(theta(m)) * zeta_half_line(m, cache)).real();
    if ((za < 0.0) == (zm < 0.0)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// sign-change scan of Z on [lo, hi]
inline std::vector<double> scan_window(double lo, double hi, double step, HalfLineCache& cache) {
  std::vector<double> found;
  double t = lo;
  double zt = (cis(theta(t)) * zeta_half_line(t, cache)).real();
  while (t < hi) {
    const double tn = std::min(t + step, hi);
    const double zn = (cis(theta(tn)) * zeta_half_line(tn, cache)).real();
    if ((zt < 0.0) != (zn < 0.0)) found.push_back(bisect_zero(t, tn, zt, cache));
    t = tn;
    zt = zn;
  }
  return found;
}

// main-term count theta(t)/pi + 1; deviation beyond ~1.6 signals a missed pair
inline double count_deficit(double t, size_t zeros_below) {
  return double(zeros_below) - (theta(t) / PI + 1.0);
}

}  // namespace detail

// Hardy-function zero scan with a completeness check against the main-term count.
// A persistent deficit triggers a rescan of the suspect window at step/8, then step/64.
inline ZeroSet compute_zeros(double t_max, const PrecisionConfig& cfg = {}, double step = 0.06) {
  (void)cfg;
  if (t_max < 15.0) throw DomainError("compute_zeros requires t_max >= 15");
  if (t_max > 10000.0) throw RangeError("compute_zeros validated only up to t_max = 10000");
  detail::HalfLineCache cache;
  std::vector<double> zeros = detail::scan_window(10.0, t_max, step, cache);

  for (double refine : {step / 8.0, step / 64.0, -1.0}) {
    // midpoint deficits; five consecutive beyond the S0 bound mark a miss
    int run = 0;
    double window_lo = -1.0, window_hi = -1.0;
    double last_good = 10.0;
    std::vector<std::pair<double, size_t>> checkpoints;
    checkpoints.reserve(zeros.size() + 1);
    for (size_t k = 0; k + 1 < zeros.size(); ++k)
      checkpoints.push_back({0.5 * (zeros[k] + zeros[k + 1]), k + 1});
    if (!zeros.empty() && zeros.back() < t_max)
      checkpoints.push_back({t_max, zeros.size()});
    for (const auto& [mid, below] : checkpoints) {
      const double d = detail::count_deficit(mid, below);
      if (std::abs(d) > 1.6) {
        if (++run >= 5 || mid == t_max) {
          window_lo = last_good;
          window_hi = mid;
          break;
        }
      } else {
        run = 0;
        if (std::abs(d) < 0.9) last_good = mid;
      }
    }
    if (window_lo < 0.0) break;  // complete
    if (refine < 0.0)
      throw InvariantError("incomplete zero set: persistent count deficit in window [" +
                           fmt12(window_lo) + ", " + fmt12(window_hi) + "]");
    auto extra = detail::scan_window(window_lo, window_hi, refine, cache);
    for (double z : extra)
      if (std::none_of(zeros.begin(), zeros.end(),
                       [&](double y) { return std::abs(y - z) < 1e-8; }))
        zeros.push_back(z);
    std::sort(zeros.begin(), zeros.end());
  }

  ZeroSet zs;
  zs.source = ZeroSource::computed;
  zs.t_max = t_max;
  zs.entries.reserve(zeros.size());
  for (double z : zeros) {
    const double r = round12(z);
    if (r <= t_max) zs.entries.push_back({r, 0.5, 1});
  }
  validate(zs);
  for (const auto& e : zs.entries) {
    const double resid = std::abs((cis(theta(e.lambda)) *
                                   detail::zeta_half_line(e.lambda, cache)));
    if (resid >= 1e-7)
      throw InvariantError("zero residual check failed at lambda=" + fmt12(e.lambda));
  }
  return zs;
}

}  // namespace acidzeta
