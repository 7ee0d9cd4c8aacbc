#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "acidzeta/core.hpp"
#include "acidzeta/gammafn.hpp"

namespace acidzeta {

namespace detail {

inline void require_em_box(cplx s) {
  if (s.real() < -5.0 || s.real() > 20.0 || std::abs(s.imag()) > 100.0)
    throw RangeError("outside the validated continuation box [-5,20] x [-100,100]");
}

inline void require_off_one(cplx s) {
  if (std::abs(s - 1.0) < 1e-10) throw PoleError("pole at s = 1");
}

// value and first two s-derivatives plus error estimates
struct Triple {
  cplx v0{}, v1{}, v2{};
  double e0 = 0.0, e1 = 0.0, e2 = 0.0;
};

// Euler-Maclaurin for sum_{n>=0} (q+n)^{-s}; q = 1 gives the zeta function.
// Correction terms use B_{2k} (s)_{2k-1} (q+N)^{1-s-2k} / (2k)!, differentiated analytically.
inline Triple em_zeta_q(cplx s, double q, const PrecisionConfig& cfg) {
  using cld = std::complex<long double>;
  const int N = std::max(cfg.em_terms, int(std::ceil(1.5 * std::abs(s.imag()))));
  // all terms are generated and accumulated in extended precision: at negative real
  // part the direct sum cancels against the closed terms, and the exp() argument
  // error is amplified by |s| log x, so double generation would dominate the error
  const cld sl(s.real(), s.imag());
  cld a0 = 0, a1 = 0, a2 = 0;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;  // absolute mass per accumulator
  auto add = [&](cld p0, cld p1, cld p2) {
    a0 += p0;
    a1 += p1;
    a2 += p2;
    m0 += double(std::abs(p0));
    m1 += double(std::abs(p1));
    m2 += double(std::abs(p2));
  };
  for (int n = 0; n < N; ++n) {
    const long double lx = std::log((long double)(q + n));
    const cld p = std::exp(-sl * lx);
    add(p, -lx * p, lx * lx * p);
  }
  const double X = q + N;
  const long double L = std::log((long double)X);
  const cld sm1 = sl - 1.0L;
  const cld A = std::exp((1.0L - sl) * L) / sm1;
  add(A, A * (-L - 1.0L / sm1), A * (L * L + 2.0L * L / sm1 + 2.0L / (sm1 * sm1)));
  const cld B = 0.5L * std::exp(-sl * L);
  add(B, -L * B, L * L * B);
  Triple t;

  const int K = cfg.em_bernoulli / 2;
  cld P = sl, P1 = 1.0L, P2 = 0.0L;  // (s)_{2k-1} and derivatives, k = 1
  long double fact = 2.0L;           // (2k)!
  cld xw = std::exp((-sl - 1.0L) * L);
  const long double x2 = 1.0L / ((long double)X * X);
  cld lastT0 = 0, lastT1 = 0, lastT2 = 0;
  double mb0 = 0.0, mb1 = 0.0, mb2 = 0.0;  // correction-term mass, see error model
  for (int k = 1; k <= K + 1; ++k) {
    const long double c = (long double)BERNOULLI_EVEN[k - 1] / fact;
    lastT0 = c * P * xw;
    lastT1 = c * (P1 - P * L) * xw;
    lastT2 = c * (P2 - 2.0L * P1 * L + P * L * L) * xw;
    if (k <= K) {
      add(lastT0, lastT1, lastT2);
      mb0 += double(std::abs(lastT0));
      mb1 += double(std::abs(lastT1));
      mb2 += double(std::abs(lastT2));
    }
    // extend the rising factorial by (s+2k-1)(s+2k) and shift the power
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      const cld f = sl + (long double)j;
      P2 = P2 * f + 2.0L * P1;
      P1 = P1 * f + P;
      P = P * f;
    }
    fact *= (long double)(2 * k + 1) * (long double)(2 * k + 2);
    xw *= x2;
  }
  t.v0 = cplx(double(a0.real()), double(a0.imag()));
  t.v1 = cplx(double(a1.real()), double(a1.imag()));
  t.v2 = cplx(double(a2.real()), double(a2.imag()));
  // error model: asymptotic remainder bounded by the first omitted term times a
  // modest factor; generation noise per term is its magnitude times the extended
  // epsilon amplified by the exp() argument |s| L; the Bernoulli coefficients are
  // stored in double, so correction terms carry an extra double-epsilon share
  const double safety =
      1.0 + std::abs(s + double(2 * K + 1)) / std::max(1.0, s.real() + 2 * K + 1);
  const double amp = (2.0 + std::abs(s) * double(L)) * 1.1e-19;
  t.e0 = double(std::abs(lastT0)) * safety + amp * m0 + 1.2e-16 * mb0 + 1.2e-16 * std::abs(t.v0);
  t.e1 = double(std::abs(lastT1)) * safety + amp * m1 + 1.2e-16 * mb1 + 1.2e-16 * std::abs(t.v1);
  t.e2 = double(std::abs(lastT2)) * safety + amp * m2 + 1.2e-16 * mb2 + 1.2e-16 * std::abs(t.v2);
  return t;
}

}  // namespace detail

inline EvalResult hurwitz_zeta(cplx s, double q, const PrecisionConfig& cfg = {}) {
  if (q <= 0.0) throw DomainError("hurwitz_zeta requires q > 0");
  detail::require_off_one(s);
  detail::require_em_box(s);
  const auto t = detail::em_zeta_q(s, q, cfg);
  return {t.v0, t.e0, Method::euler_maclaurin};
}

inline detail::Triple zeta_triple(cplx s, const PrecisionConfig& cfg = {}) {
  detail::require_off_one(s);
  detail::require_em_box(s);
  return detail::em_zeta_q(s, 1.0, cfg);
}

inline EvalResult zeta_derivs(cplx s, int order, const PrecisionConfig& cfg = {}) {
  if (order < 0 || order > 2) throw DomainError("derivative order must be 0, 1 or 2");
  detail::require_off_one(s);
  detail::require_em_box(s);
  // left of the strip the direct sum loses digits to cancellation, so route through
  // the functional equation: zeta(s) = chi(s) zeta(1-s) with the log-derivative chain
  if (s.real() < -0.5) {
    const cplx half_pi_s = 0.5 * PI * s;
    const cplx sn = std::sin(half_pi_s);
    if (std::abs(sn) > 1e-12) {
      const auto t = detail::em_zeta_q(1.0 - s, 1.0, cfg);
      const cplx chi =
          std::exp(s * std::log(2.0) + (s - 1.0) * LN_PI + std::log(sn) + log_gamma(1.0 - s));
      const cplx Lc = LN_2PI + 0.5 * PI * std::cos(half_pi_s) / sn - digamma(1.0 - s);
      cplx v;
      double e;
      if (order == 0) {
        v = chi * t.v0;
        e = std::abs(chi) * t.e0;
      } else if (order == 1) {
        v = chi * (Lc * t.v0 - t.v1);
        e = std::abs(chi) * (std::abs(Lc) * t.e0 + t.e1);
      } else {
        const cplx Lp = -0.25 * PI * PI / (sn * sn) + trigamma(1.0 - s);
        v = chi * ((Lc * Lc + Lp) * t.v0 - 2.0 * Lc * t.v1 + t.v2);
        e = std::abs(chi) * (std::norm(Lc) + std::abs(Lp)) * t.e0 +
            std::abs(chi) * (2.0 * std::abs(Lc) * t.e1 + t.e2);
      }
      // the gamma and sine factors carry relative noise amplified by |log chi|
      e += 1e-14 * (1.0 + std::abs(s) * std::log(2.0 + std::abs(s))) * std::abs(v);
      return {v, e, Method::euler_maclaurin};
    }
    // at a trivial zero the prefactor vanishes; direct summation is accurate enough
  }
  const auto t = detail::em_zeta_q(s, 1.0, cfg);
  switch (order) {
    case 0: return {t.v0, t.e0, Method::euler_maclaurin};
    case 1: return {t.v1, t.e1, Method::euler_maclaurin};
    default: return {t.v2, t.e2, Method::euler_maclaurin};
  }
}

namespace detail {

// expansion of (s-1)zeta(s) = 1 + u about s = 1; u, u', u'' from the Stieltjes series.
// Radius of use 0.3 keeps the truncation at the 1e-13 scale.
struct NearOne {
  cplx u, u1, u2;
};

inline NearOne stieltjes_u(cplx eps) {
  NearOne r{};
  if (std::abs(eps) < 1e-50) {  // avoid 0/0 in the power recurrences
    r.u = STIELTJES[0] * eps;
    r.u1 = STIELTJES[0];
    r.u2 = -2.0 * STIELTJES[1];
    return r;
  }
  double kfac = 1.0;
  cplx ep = eps;  // eps^{k+1}
  for (int k = 0; k < 15; ++k) {
    const double c = (k % 2 ? -1.0 : 1.0) * STIELTJES[k] / kfac;
    r.u += c * ep;
    if (k == 0)
      r.u1 += c;
    else
      r.u1 += c * double(k + 1) * ep / eps;
    if (k >= 1) r.u2 += c * double(k + 1) * double(k) * (k == 1 ? cplx(1.0) : ep / (eps * eps));
    kfac *= double(k + 1);
    ep *= eps;
  }
  return r;
}

}  // namespace detail

// (zeta'/zeta)(s) with a cancellation-free path near s = 1
inline EvalResult zeta_logderiv(cplx s, const PrecisionConfig& cfg = {}) {
  const cplx eps = s - 1.0;
  if (std::abs(eps) < 1e-10) throw PoleError("zeta'/zeta pole at s = 1");
  if (std::abs(eps) <= 0.3) {
    const auto n = detail::stieltjes_u(eps);
    const cplx h1 = n.u1 / (1.0 + n.u);
    const cplx val = -1.0 / eps + h1;
    return {val, 5e-15 * std::abs(val) + 1e-13, Method::series};
  }
  const auto t = zeta_triple(s, cfg);
  const cplx val = t.v1 / t.v0;
  const double err = (t.e1 + std::abs(val) * t.e0) / std::abs(t.v0);
  return {val, err, Method::rational_in_zeta};
}

namespace detail {

// d/ds (zeta'/zeta) via the near-pole series: 1/eps^2 + h''(eps), h = log(1+u)
inline EvalResult j2_series_path(cplx eps) {
  const auto n = stieltjes_u(eps);
  const cplx opu = 1.0 + n.u;
  const cplx h2 = (n.u2 * opu - n.u1 * n.u1) / (opu * opu);
  const cplx val = 1.0 / (eps * eps) + h2;
  return {val, 5e-15 * std::abs(val) + 1e-13, Method::series};
}

inline EvalResult j2_rational_path(cplx s, const PrecisionConfig& cfg) {
  const auto t = zeta_triple(s, cfg);
  const cplx num = t.v2 * t.v0 - t.v1 * t.v1;
  const cplx den = t.v0 * t.v0;
  const cplx val = num / den;
  const double a0 = std::abs(t.v0);
  const double err =
      (a0 * t.e2 + std::abs(t.v2) * t.e0 + 2.0 * std::abs(t.v1) * t.e1) / std::abs(den) +
      2.0 * std::abs(val) * t.e0 / a0;
  return {val, err, Method::rational_in_zeta};
}

// prime powers n <= 10^6 with weight Lambda(n) ln n, ascending (trial factorization)
struct VonMangoldtTable {
  std::vector<double> nval;    // prime power n
  std::vector<double> ln_n;    // ln n
  std::vector<double> weight;  // Lambda(n) ln n
  static const VonMangoldtTable& instance() {
    static const VonMangoldtTable t = build();
    return t;
  }

 private:
  static VonMangoldtTable build() {
    constexpr long NMAX = 1000000;
    VonMangoldtTable t;
    t.nval.reserve(80000);
    t.ln_n.reserve(80000);
    t.weight.reserve(80000);
    for (long n = 2; n <= NMAX; ++n) {
      long p = 0, m = n;
      if (m % 2 == 0) {
        p = 2;
      } else {
        for (long d = 3; d * d <= m; d += 2)
          if (m % d == 0) {
            p = d;
            break;
          }
        if (p == 0) p = m;  // n prime
      }
      while (m % p == 0) m /= p;
      if (m != 1) continue;  // not a prime power
      const double ln = std::log(double(n));
      t.nval.push_back(double(n));
      t.ln_n.push_back(ln);
      t.weight.push_back(std::log(double(p)) * ln);
    }
    return t;
  }
};

// integral bound for the tail sum_{n>N} ln^2 n * n^{-sigma}, sigma > 1
inline double dirichlet_tail_bound(double N, double sigma) {
  const double a = sigma - 1.0;
  const double lnN = std::log(N);
  return std::exp(-a * lnN) * (lnN * lnN / a + 2.0 * lnN / (a * a) + 2.0 / (a * a * a));
}

inline EvalResult j2_dirichlet_path(cplx s, const PrecisionConfig& cfg) {
  const auto& tab = VonMangoldtTable::instance();
  const double sigma = s.real();
  cplx acc = 0.0;
  double absacc = 0.0;
  double cut = 1e6;
  const size_t limit = tab.ln_n.size();
  for (size_t i = 0; i < limit; ++i) {
    const double ln = tab.ln_n[i];
    const double n = tab.nval[i];
    if (n > double(cfg.series_max)) {
      cut = n;
      break;
    }
    const cplx term = tab.weight[i] * std::exp(-s * ln);
    acc += term;
    absacc += std::abs(term);
    if (i % 64 == 0 && dirichlet_tail_bound(n + 1.0, sigma) < 1e-16 * (1.0 + absacc)) {
      cut = n + 1.0;
      break;
    }
  }
  const double err = dirichlet_tail_bound(std::min(cut, 1e6), sigma) + 1e-16 * absacc;
  return {acc, err, Method::dirichlet_series};
}

}  // namespace detail

// J2(s) = d/ds (zeta'/zeta)(s); route chosen by which error estimate wins
inline EvalResult j2(cplx s, const PrecisionConfig& cfg = {}) {
  const cplx eps = s - 1.0;
  if (std::abs(eps) < 1e-6) throw DomainError("J2 has a double pole at s = 1");
  if (std::abs(eps) <= 0.3) return detail::j2_series_path(eps);
  if (s.real() >= 3.5) return detail::j2_dirichlet_path(s, cfg);
  return detail::j2_rational_path(s, cfg);
}

inline EvalResult j2_dirichlet(cplx s, const PrecisionConfig& cfg = {}) {
  if (s.real() <= 1.0) throw DomainError("Dirichlet series requires Re s > 1");
  return detail::j2_dirichlet_path(s, cfg);
}

inline EvalResult j2_rational(cplx s, const PrecisionConfig& cfg = {}) {
  const cplx eps = s - 1.0;
  if (std::abs(eps) < 1e-6) throw DomainError("J2 has a double pole at s = 1");
  if (std::abs(eps) <= 0.3) return detail::j2_series_path(eps);
  return detail::j2_rational_path(s, cfg);
}

}  // namespace acidzeta
