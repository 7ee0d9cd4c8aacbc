#pragma once

#include <cmath>

#include "acidzeta/core.hpp"

namespace acidzeta {
namespace detail {

inline constexpr double LN_SQRT_2PI = 0.918938533204672741780329736405617639;

inline void require_off_poles(cplx z) {
  if (z.real() < 0.5) {
    const double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z - cplx(r, 0.0)) < 1e-12)
      throw DomainError("gamma-family pole at nonpositive integer");
  }
}

// Stirling series, valid Re w >= 10
inline cplx stirling_log_gamma(cplx w) {
  const cplx lw = std::log(w);
  cplx acc = (w - 0.5) * lw - w + LN_SQRT_2PI;
  const cplx w2 = w * w;
  cplx p = w;  // w^(2k-1)
  for (int k = 1; k <= 12; ++k) {
    const int tk = 2 * k;
    acc += BERNOULLI_EVEN[k - 1] / (double(tk) * double(tk - 1)) / p;
    p *= w2;
  }
  return acc;
}

inline cplx stirling_digamma(cplx w) {
  cplx acc = std::log(w) - 0.5 / w;
  const cplx w2 = w * w;
  cplx p = w2;  // w^(2k)
  for (int k = 1; k <= 12; ++k) {
    acc -= BERNOULLI_EVEN[k - 1] / double(2 * k) / p;
    p *= w2;
  }
  return acc;
}

inline cplx stirling_trigamma(cplx w) {
  cplx acc = 1.0 / w + 0.5 / (w * w);
  const cplx w2 = w * w;
  cplx p = w * w2;  // w^(2k+1)
  for (int k = 1; k <= 12; ++k) {
    acc += BERNOULLI_EVEN[k - 1] / p;
    p *= w2;
  }
  return acc;
}

}  // namespace detail

// principal branch (continuous continuation, imaginary part not reduced mod 2pi)
inline cplx log_gamma(cplx z) {
  detail::require_off_poles(z);
  int m = 0;
  if (z.real() < 10.0) m = int(std::ceil(10.0 - z.real()));
  cplx shift = 0.0;
  for (int j = 0; j < m; ++j) shift += std::log(z + double(j));
  return detail::stirling_log_gamma(z + double(m)) - shift;
}

inline cplx digamma(cplx z) {
  detail::require_off_poles(z);
  int m = 0;
  if (z.real() < 10.0) m = int(std::ceil(10.0 - z.real()));
  cplx shift = 0.0;
  for (int j = 0; j < m; ++j) shift += 1.0 / (z + double(j));
  return detail::stirling_digamma(z + double(m)) - shift;
}

inline cplx trigamma(cplx z) {
  detail::require_off_poles(z);
  int m = 0;
  if (z.real() < 10.0) m = int(std::ceil(10.0 - z.real()));
  cplx shift = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx d = z + double(j);
    shift += 1.0 / (d * d);
  }
  return detail::stirling_trigamma(z + double(m)) + shift;
}

}  // namespace acidzeta
