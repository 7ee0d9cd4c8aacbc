#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "acidzeta/core.hpp"
#include "acidzeta/gammafn.hpp"
#include "acidzeta/quadrature.hpp"
#include "acidzeta/zeroset.hpp"

namespace acidzeta {

// theta(t) = Im log_gamma(1/4 + it/2) - (t/2) ln pi, continuous in t
inline double theta(double t) {
  if (t < 0.0) throw DomainError("theta requires t >= 0");
  return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * LN_PI;
}

namespace detail {

struct HalfLineCache {
  std::vector<double> ln;     // ln n
  std::vector<double> rsqrt;  // n^{-1/2}
  void ensure(size_t n) {
    while (ln.size() < n) {
      const double v = double(ln.size() + 1);
      ln.push_back(std::log(v));
      rsqrt.push_back(1.0 / std::sqrt(v));
    }
  }
};

// zeta(1/2 + it) by Euler-Maclaurin sized for heights up to ~10^4
inline cplx zeta_half_line(double t, HalfLineCache& cache) {
  const cplx s(0.5, t);
  const int N = int(std::ceil(0.5 * std::abs(t))) + 50;
  cache.ensure(size_t(N));
  cplx sum = 0.0;
  for (int n = 1; n < N; ++n)
    sum += cache.rsqrt[n - 1] * cis(-t * cache.ln[n - 1]);
  const double L = cache.ln[N - 1];
  const cplx sm1 = s - 1.0;
  sum += std::exp((1.0 - s) * L) / sm1;
  sum += 0.5 * std::exp(-s * L);
  cplx P = s;  // (s)_{2k-1}
  double fact = 2.0;
  cplx xw = std::exp((-s - 1.0) * L);
  const double x2 = 1.0 / (double(N) * double(N));
  for (int k = 1; k <= 10; ++k) {
    sum += BERNOULLI_EVEN[k - 1] / fact * P * xw;
    P *= (s + double(2 * k - 1)) * (s + double(2 * k));
    fact *= double(2 * k + 1) * double(2 * k + 2);
    xw *= x2;
  }
  return sum;
}

inline HalfLineCache& tl_half_cache() {
  thread_local HalfLineCache cache;
  return cache;
}

}  // namespace detail

// Hardy function: Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t
inline double hardy_z(double t) {
  const cplx z = detail::zeta_half_line(t, detail::tl_half_cache());
  return (cis(theta(t)) * z).real();
}

inline cplx zeta_half(double t) { return detail::zeta_half_line(t, detail::tl_half_cache()); }

// step count sum of multiplicities over lambda <= T (right-continuous)
inline double count_N(double T, const ZeroSet& zs) {
  if (T > zs.t_max) throw RangeError("count_N beyond certified height");
  double n = 0.0;
  for (const auto& e : zs.entries) {
    if (e.lambda > T) break;
    n += e.multiplicity;
  }
  return n;
}

// S0(t) = (1/pi) arg zeta(1/2+it), realized as N(t) - 1 - theta(t)/pi
inline double s0(double t, const ZeroSet& zs) {
  if (t > zs.t_max) throw RangeError("s0 beyond certified height");
  return count_N(t, zs) - 1.0 - theta(t) / PI;
}

// cached prefix integrals of S0 at each distinct ordinate; panels are smooth
class ZeroCountFns {
 public:
  explicit ZeroCountFns(const ZeroSet& zs) : zs_(&zs) {
    breaks_.push_back(0.0);
    for (const auto& e : zs.entries)
      if (e.lambda != breaks_.back()) breaks_.push_back(e.lambda);
    // counts_[i] = N(t) for t in [breaks_[i], breaks_[i+1])
    counts_.assign(breaks_.size(), 0.0);
    double acc = 0.0;
    size_t ei = 0;
    for (size_t i = 0; i < breaks_.size(); ++i) {
      while (ei < zs.entries.size() && zs.entries[ei].lambda <= breaks_[i]) {
        acc += zs.entries[ei].multiplicity;
        ++ei;
      }
      counts_[i] = acc;
    }
    prefix_.resize(breaks_.size());
    prefix_[0] = 0.0;
    for (size_t i = 0; i + 1 < breaks_.size(); ++i)
      prefix_[i + 1] = prefix_[i] + panel_integral(i, breaks_[i + 1]);
  }

  double t_max() const { return zs_->t_max; }

  double count(double T) const {
    if (T > zs_->t_max) throw RangeError("count beyond certified height");
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), T);
    const size_t i = size_t(it - breaks_.begin());
    return i == 0 ? 0.0 : counts_[i - 1];
  }

  double s0(double t) const { return count(t) - 1.0 - theta(t) / PI; }

  // integral of S0 over (0, T] plus c1
  double s1(double T, double c1 = 0.0) const {
    if (T > zs_->t_max) throw RangeError("s1 beyond certified height");
    if (T <= 0.0) return c1;
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), T);
    const size_t i = size_t(it - breaks_.begin()) - 1;
    return prefix_[i] + panel_integral(i, T) + c1;
  }

 private:
  // integral of S0 from breaks_[i] to b (b inside panel i); chunks keep GL16 sharp
  double panel_integral(size_t i, double b) const {
    const double a = breaks_[i];
    if (b <= a) return 0.0;
    const double n = counts_[i];
    auto f = [&](double t) { return n - 1.0 - theta(t) / PI; };
    const int chunks = std::max(1, int(std::ceil((b - a) / 2.0)));
    const double h = (b - a) / chunks;
    double acc = 0.0;
    for (int c = 0; c < chunks; ++c)
      acc += detail::gl16(f, a + c * h, a + (c + 1) * h).real();
    return acc;
  }

  const ZeroSet* zs_;
  std::vector<double> breaks_;  // 0, then distinct ordinates
  std::vector<double> counts_;  // N on the panel starting at breaks_[i]
  std::vector<double> prefix_;  // integral of S0 up to breaks_[i]
};

inline double s1(double T, double c1, const ZeroSet& zs, const PrecisionConfig& = {}) {
  return ZeroCountFns(zs).s1(T, c1);
}

}  // namespace acidzeta
