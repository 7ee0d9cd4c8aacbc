#pragma once

#include <cmath>

#include "acidzeta/acid.hpp"
#include "acidzeta/core.hpp"
#include "acidzeta/counting.hpp"
#include "acidzeta/gammafn.hpp"
#include "acidzeta/quadrature.hpp"
#include "acidzeta/specfun.hpp"
#include "acidzeta/zeroset.hpp"

namespace acidzeta {

// zeta_a^*(s) = integral t^{-s} dN(t) = sum of mult * lambda^{-s}
inline EvalResult zero_sum_adjoint(cplx s, const ZeroSet& zs, TailPolicy tail = {}) {
  if (!(s.real() > 1.0)) throw DomainError("zero_sum_adjoint requires Re s > 1");
  if (zs.empty()) throw DomainError("zero_sum_adjoint requires a nonempty zero set");
  cplx acc = 0.0;
  double absacc = 0.0;
  for (const auto& e : zs.entries) {
    const cplx term = double(e.multiplicity) * std::exp(-s * std::log(cplx(e.lambda, 0.0)));
    acc += term;
    absacc += std::abs(term);
  }
  const double X = zs.entries.back().lambda;
  double err = 1e-16 * absacc;
  if (tail.mode == TailMode::main_term) {
    acc += detail::main_term_tail(s, X);
    err += detail::tail_fluctuation(s, X);
  } else {
    err += std::abs(detail::main_term_tail(s, X)) + detail::tail_fluctuation(s, X);
  }
  return {acc, err, Method::series};
}

// smooth part of the zero count, two readings of the gamma-factor argument
inline double m_func(double t, Variant variant = Variant::audited) {
  if (variant == Variant::audited)
    return (-(0.5 * t) * LN_PI + log_gamma(cplx(1.25, 0.5 * t)).imag()) / PI;
  return ((0.5 * t) * LN_PI + log_gamma(cplx(-1.25, 0.5 * t)).imag()) / PI;
}

inline double m_func_deriv(double t, int order, Variant variant = Variant::audited) {
  const cplx z = variant == Variant::audited ? cplx(1.25, 0.5 * t) : cplx(-1.25, 0.5 * t);
  const double lp = variant == Variant::audited ? -0.5 * LN_PI : 0.5 * LN_PI;
  if (order == 1) return (lp + 0.5 * digamma(z).real()) / PI;
  if (order == 2) return -0.25 * trigamma(z).imag() / PI;
  throw DomainError("m_func_deriv supports orders 1 and 2");
}

// pi N(t) = arg(-1/2 + it) + pi M(t) + pi S0(t); the identity is exact, so the parts
// reconstruct the integer count to rounding
struct GArgDecomposition {
  double arg_part = 0.0, m_part = 0.0, s0_part = 0.0;
  double total = 0.0;
  double n_value = 0.0;
};

inline GArgDecomposition garg_decomposition(double t, const ZeroSet& zs) {
  GArgDecomposition d;
  d.arg_part = PI - std::atan(2.0 * t);
  d.m_part = PI * m_func(t, Variant::audited);
  d.s0_part = PI * s0(t, zs);
  d.total = d.arg_part + d.m_part + d.s0_part;
  d.n_value = double(count_N(t, zs));
  if (std::abs(d.total - PI * d.n_value) > 1e-8 * (1.0 + std::abs(d.total)))
    throw InvariantError("argument decomposition failed to reconstruct the zero count");
  return d;
}

// closed form of the boundary-argument transform; the re-derived sign is negative,
// the printed one positive
inline EvalResult arg_term_closed(cplx s, Variant variant = Variant::audited) {
  const cplx cospi2 = std::cos(0.5 * PI * s);
  if (std::abs(cospi2) < 1e-8) throw PoleError("arg term has poles at odd integers");
  const cplx v = std::exp((s - 1.0) * std::log(2.0)) / cospi2;
  return closed(variant == Variant::audited ? -v : v);
}

// quadrature companion: -(2/pi)[1/(1-s) - 4 I0 + I1] continues
// integral_0^inf t^{-s} d/dt arg(-1/2+it) dt / pi past Re s = 1
inline EvalResult arg_term_quad(cplx s, const PrecisionConfig& cfg = {}) {
  if (!(s.real() < 3.0)) throw DomainError("arg_term_quad requires Re s < 3");
  if (std::abs(s - 1.0) < 1e-8) throw PoleError("arg_term_quad is indeterminate at s = 1");
  auto inner = [&](double t) { return pow_rc(t, 2.0 - s) / (1.0 + 4.0 * t * t); };
  const auto q0 = tanh_sinh(inner, 0.0, 1.0, cfg.quad_tol);
  auto outer = [&](double u) {
    const double t = 1.0 / u;
    return pow_rc(t, -s) / (1.0 + 4.0 * t * t) * t * t;  // t = 1/u substitution
  };
  const auto q1 = tanh_sinh(outer, 0.0, 1.0, cfg.quad_tol);
  const cplx v = -(2.0 / PI) * (1.0 / (1.0 - s) - 4.0 * q0.value + q1.value);
  return {v, (2.0 / PI) * (4.0 * q0.err + q1.err) + 1e-14 * std::abs(v), Method::quadrature};
}

// both sides of the Mellin transfer between M'' and the trigamma kernel on 1 < Re s < 2.
// lhs uses central differences of M so it stays independent of the closed derivative.
struct Lemma3Sides {
  EvalResult lhs;  // pi * integral_0^inf M''(t) t^{1-s} dt
  EvalResult rhs;  // sin(pi s/2) * integral_0^inf j(1/2 + t) t^{1-s} dt, re-derived sign
};

inline Lemma3Sides lemma3_sides(cplx s, const PrecisionConfig& cfg = {}) {
  if (!(s.real() > 1.0 && s.real() < 2.0))
    throw DomainError("lemma3_sides requires 1 < Re s < 2");
  auto m2 = [&](double t) {
    // rounding in M grows like t log t while the curvature decays, so the stencil
    // widens with t to keep the step^-2 noise amplification below the truncation
    const double h = std::max(0.01, 0.02 * std::sqrt(std::abs(t)));
    auto d2 = [&](double step) {
      return (m_func(t + step) - 2.0 * m_func(t) + m_func(t - step)) / (step * step);
    };
    return (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
  };
  auto fl = [&](double t) { return PI * m2(t) * pow_rc(t, 1.0 - s); };
  auto fr = [&](double t) { return j_series(cplx(0.5 + t, 0.0)).value * pow_rc(t, 1.0 - s); };
  const double X = 3000.0;
  const double panels[] = {0.0, 1.0, 10.0, 50.0, 200.0, 1000.0, X};
  cplx Il = 0.0, Ir = 0.0;
  double el = 0.0, er = 0.0;
  for (int i = 0; i + 1 < 7; ++i) {
    if (i == 0) {
      const auto ql = tanh_sinh(fl, panels[0], panels[1], cfg.quad_tol);
      const auto qr = tanh_sinh(fr, panels[0], panels[1], cfg.quad_tol);
      Il += ql.value; el += ql.err;
      Ir += qr.value; er += qr.err;
    } else {
      const auto ql = integrate_smooth(fl, panels[i], panels[i + 1], cfg.quad_tol);
      const auto qr = integrate_smooth(fr, panels[i], panels[i + 1], cfg.quad_tol);
      Il += ql.value; el += ql.err;
      Ir += qr.value; er += qr.err;
    }
  }
  // tails from pi M'' = 1/(2t) + O(t^-3) and j(1/2+t) = 1/(2t) - (3/4)/t^2 + O(t^-3)
  const cplx lead = 0.5 * std::exp((1.0 - s) * std::log(X)) / (s - 1.0);
  Il += lead;
  Ir += lead - 0.75 * std::exp(-s * std::log(X)) / s;
  const double sigma = s.real();
  const double resid = 3.0 * std::exp(-(1.0 + sigma) * std::log(X)) / (1.0 + sigma);
  el += resid + 1e-8 * (1.0 + std::abs(Il));  // residual finite-difference noise
  er += resid;
  Lemma3Sides out;
  out.lhs = {Il, el, Method::quadrature};  // fl already carries the pi factor
  const cplx spref = std::sin(0.5 * PI * s);
  out.rhs = {spref * Ir, std::abs(spref) * er, Method::quadrature};
  return out;
}

struct HalfExplicitParams {
  double c1 = 0.0;        // integration constant of the S1 antiderivative
  double s1_upper = 0.0;  // truncation of the S1 transform; 0 means the table top
  Variant variant = Variant::audited;
};

struct HalfExplicitParts {
  cplx cf_arg{}, cf_m{}, t_s{}, r{};
  double err = 0.0;
  cplx total() const { return cf_arg + cf_m + t_s + r; }
};

// continuation of the adjoint zero sum built from the counting decomposition:
// boundary-argument term, smooth gamma-factor term, twice-integrated fluctuation
// transform, and the [0,1] remainder
inline HalfExplicitParts half_explicit_parts(cplx s, const ZeroSet& zs,
                                             const HalfExplicitParams& p = {},
                                             const PrecisionConfig& cfg = {}) {
  if (!(s.real() > -1.0 && s.real() < 3.0))
    throw DomainError("half_explicit requires -1 < Re s < 3");
  if (std::abs(s - 1.0) < 1e-8) throw PoleError("half_explicit is indeterminate at s = 1");
  const cplx cospi2 = std::cos(0.5 * PI * s);
  if (std::abs(cospi2) < 1e-8) throw PoleError("half_explicit has poles at odd integers");
  if (zs.empty()) throw DomainError("half_explicit requires a nonempty zero set");

  ZeroCountFns fns(zs);
  const double up = p.s1_upper > 0.0 ? std::min(p.s1_upper, fns.t_max()) : fns.t_max();
  if (!(up > 1.0)) throw DomainError("half_explicit requires the transform cutoff above 1");

  HalfExplicitParts parts;
  const Variant var = p.variant;
  parts.cf_arg = arg_term_closed(s, var).value;
  const auto hz = hurwitz_zeta(s, 1.25, cfg);
  parts.cf_m = -hz.value / (cospi2 * std::exp((s + 1.0) * std::log(2.0)));
  double err = hz.err / std::abs(cospi2 * std::exp((s.real() + 1.0) * std::log(2.0)));

  // s(s+1) integral_1^up S1(t) t^{-s-2} dt, one panel per zero gap keeps the kinks
  // at panel boundaries
  {
    auto fS = [&](double t) { return fns.s1(t, p.c1) * pow_rc(t, -s - 2.0); };
    std::vector<double> cuts;
    cuts.push_back(1.0);
    for (const auto& e : zs.entries)
      if (e.lambda > 1.0 && e.lambda < up) {
        if (cuts.back() != e.lambda) cuts.push_back(e.lambda);
      }
    cuts.push_back(up);
    cplx I = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      // the weight t^{-s-2} varies sharply across a panel that is wide relative
      // to its distance from the origin; keep the endpoint ratio bounded
      double a = cuts[i];
      const double b = cuts[i + 1];
      while (b > 1.25 * a) {
        I += detail::gl16(fS, a, 1.25 * a);
        a *= 1.25;
      }
      I += detail::gl16(fS, a, b);
    }
    parts.t_s = s * (s + 1.0) * I;
    const double sigma = s.real();
    err += std::abs(s * (s + 1.0)) *
           (3.0 * std::log(up) * std::exp(-(sigma + 1.0) * std::log(up)) / (sigma + 1.0) +
            1e-14 * std::abs(I));
  }

  const double s0_1 = s0(1.0, zs);
  const double s1_1 = fns.s1(1.0, p.c1);
  if (var == Variant::audited) {
    // subtract g(0) so the [0,1] integrand is O(t^{2-s}); the pole of the
    // subtracted piece continues the transform past Re s = 1
    const double g0 = m_func_deriv(0.0, 1, Variant::audited) - 2.0 / PI;
    auto g = [&](double t) {
      return m_func_deriv(t, 1, Variant::audited) - (2.0 / PI) / (1.0 + 4.0 * t * t);
    };
    // the difference g - g0 is even in t; fit its t^2 and t^4 coefficients at
    // two clean points and use that model near 0, where t^{-Re s} would
    // otherwise amplify evaluation noise and a one-term model biases the tail
    const double fa = 2.5e-5, fb = 2.5e-7;
    const double dga = g(5e-3) - g0, dgb = g(5e-4) - g0;
    const double det = fa * fb * (fb - fa);
    const double g2c = (dga * fb * fb - dgb * fa * fa) / det;
    const double g4c = (dgb * fa - dga * fb) / det;
    auto fr = [&](double t) {
      const double dg = g(t) - g0;
      if (std::abs(dg) < 1e-8) return pow_rc(t, -s) * ((g2c + g4c * t * t) * t * t);
      return pow_rc(t, -s) * dg;
    };
    const auto q = tanh_sinh(fr, 0.0, 1.0, cfg.quad_tol);
    parts.r = -(g0 / (1.0 - s) + q.value) - s0_1 - s * s1_1;
    const double sigma = s.real();
    const double tc = std::sqrt(1e-8 / std::max(1.0, std::abs(g2c)));
    const double noise = sigma > 1.05
                             ? 2e-16 * std::exp((1.0 - sigma) * std::log(tc)) / (sigma - 1.0)
                             : 2e-16 * (-std::log(tc));
    const double model = 1e-9 * std::abs(g2c) * std::exp((3.0 - sigma) * std::log(tc)) / (3.0 - sigma);
    err += q.err + noise + model;
  } else {
    auto fr = [&](double t) {
      return pow_rc(t, s) *
             (m_func_deriv(t, 1, Variant::literal) - (2.0 / PI) / (1.0 + 4.0 * t * t));
    };
    const auto q = tanh_sinh(fr, 0.0, 1.0, cfg.quad_tol);
    parts.r = -q.value - s0_1 - s * s1_1;
    err += q.err;
  }
  parts.err = err + 1e-14 * std::abs(parts.total());
  return parts;
}

inline EvalResult half_explicit(cplx s, const ZeroSet& zs, const HalfExplicitParams& p = {},
                                const PrecisionConfig& cfg = {}) {
  const auto parts = half_explicit_parts(s, zs, p, cfg);
  return {parts.total(), parts.err, Method::quadrature};
}

}  // namespace acidzeta
