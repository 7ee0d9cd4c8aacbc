#pragma once

#include <cmath>
#include <functional>

#include "acidzeta/core.hpp"

namespace acidzeta {

struct QuadResult {
  cplx value{};
  double err = 0.0;
};

namespace detail {

// Gauss-Legendre 16-point abscissae/weights on [-1, 1], positive half
inline constexpr double GL16_X[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
inline constexpr double GL16_W[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

template <class F>
cplx gl16(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), d = 0.5 * (b - a);
  cplx acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = d * GL16_X[i];
    acc += GL16_W[i] * (f(c + dx) + f(c - dx));
  }
  return d * acc;
}

}  // namespace detail

// panel-doubling composite Gauss-Legendre; integrand must be smooth on [a, b]
template <class F>
QuadResult integrate_smooth(F&& f, double a, double b, double tol, int max_splits = 11) {
  cplx prev = detail::gl16(f, a, b);
  double err = std::abs(prev);
  for (int level = 1; level <= max_splits; ++level) {
    const int n = 1 << level;
    const double h = (b - a) / n;
    cplx cur = 0.0;
    for (int i = 0; i < n; ++i) cur += detail::gl16(f, a + i * h, a + (i + 1) * h);
    err = std::abs(cur - prev);
    prev = cur;
    if (err < tol * std::max(1.0, std::abs(cur))) break;
  }
  return {prev, err};
}

// tanh-sinh rule; tolerates integrable endpoint singularities (nodes never touch a or b)
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double tol, int max_level = 12) {
  const double c = 0.5 * (a + b), d = 0.5 * (b - a);
  const double HPI = 0.5 * PI;
  double h = 1.0;
  cplx mid = f(c);
  cplx sum = HPI * mid;  // k = 0 node, weight pi/2
  cplx prev_integral = d * h * sum;
  double err = std::abs(prev_integral);
  for (int level = 0; level <= max_level; ++level) {
    if (level > 0) h *= 0.5;
    // at level 0 take all k >= 1; afterwards only odd k (previous nodes reused)
    const int stride = level == 0 ? 1 : 2;
    const int k0 = 1;
    cplx add = 0.0;
    for (int k = k0; ; k += stride) {
      const double u = k * h;
      const double sh = HPI * std::sinh(u);
      const double q = std::exp(-2.0 * sh);
      const double off = 2.0 * d * q / (1.0 + q);  // d * (1 - tanh(sh))
      // nodes may pass the double-precision distance to the endpoints: integrable
      // endpoint singularities keep contributing until the weighted term dies
      if (off < 1e-300 * d) break;
      const double w = HPI * std::cosh(u) * 4.0 * q / ((1.0 + q) * (1.0 + q));
      const cplx fv = f(a + off) + f(b - off);
      if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) break;
      add += w * fv;
      if (w * std::abs(fv) < 1e-18 * std::abs(sum) && k > 4 / h) break;
    }
    sum += add;
    const cplx cur = d * h * sum;
    err = std::abs(cur - prev_integral);
    prev_integral = cur;
    if (level >= 2 && err < tol * std::max(1.0, std::abs(cur))) break;
  }
  return {prev_integral, err};
}

// integral over [a, inf): map t = a + u/(1-u), then tanh-sinh in u
template <class F>
QuadResult integrate_to_inf(F&& f, double a, double tol) {
  auto g = [&](double u) {
    const double om = 1.0 - u;
    return f(a + u / om) / (om * om);
  };
  return tanh_sinh(g, 0.0, 1.0, tol);
}

}  // namespace acidzeta
