#pragma once

#include <cmath>
#include <vector>

#include "acidzeta/core.hpp"
#include "acidzeta/gammafn.hpp"
#include "acidzeta/quadrature.hpp"
#include "acidzeta/zetafn.hpp"

namespace acidzeta {

// J(s) = sum_{n>=1} 1/(s+2n)^2 = trigamma(s/2 + 1)/4
inline EvalResult j_series(cplx s) {
  const cplx v = 0.25 * trigamma(0.5 * s + 1.0);
  return {v, 1e-14 * std::abs(v) + 1e-16, Method::series};
}

// (xi'/xi)(z) = 1/(z-1) - ln(pi)/2 + digamma(z/2+1)/2 + (zeta'/zeta)(z).
// Near z = 1 the two singular pieces cancel analytically; they are never formed,
// which keeps the point z = 1 itself evaluable.
inline EvalResult xi_logderiv(cplx z, const PrecisionConfig& cfg = {}) {
  const cplx gpart = -0.5 * LN_PI + 0.5 * digamma(0.5 * z + 1.0);
  const cplx eps = z - 1.0;
  if (std::abs(eps) <= 0.3) {
    const auto n = detail::stieltjes_u(eps);
    const cplx val = gpart + n.u1 / (1.0 + n.u);
    return {val, 1e-13 * (1.0 + std::abs(val)), Method::series};
  }
  const auto zl = zeta_logderiv(z, cfg);
  const cplx val = 1.0 / eps + gpart + zl.value;
  return {val, zl.err + 1e-15 * std::abs(val), zl.method};
}

// derivative of xi'/xi; the pole term of J2 at z = 1 cancels against -1/(z-1)^2,
// so the near-pole branch works with the regular part only
inline EvalResult psi_cap(cplx z, const PrecisionConfig& cfg = {}) {
  const auto J = j_series(z);
  const cplx eps = z - 1.0;
  if (std::abs(eps) <= 0.3) {
    const auto n = detail::stieltjes_u(eps);
    const cplx opu = 1.0 + n.u;
    const cplx h2 = (n.u2 * opu - n.u1 * n.u1) / (opu * opu);
    const cplx val = J.value + h2;
    return {val, J.err + 1e-13, Method::series};
  }
  const auto J2 = j2(z, cfg);
  const cplx val = -1.0 / (eps * eps) + J.value + J2.value;
  return {val, J.err + J2.err + 1e-15 / std::norm(eps), J2.method};
}

// oracle identity: integral_0^inf x^s/(x+a) dx = -pi/sin(pi s) * a^s for -1 < Re s < 0
inline VerificationRecord appendix_integral_check(cplx s, double a,
                                                  const PrecisionConfig& cfg = {}) {
  if (!(s.real() > -1.0 && s.real() < 0.0))
    throw DomainError("appendix identity requires -1 < Re s < 0");
  if (a <= 0.0) throw DomainError("appendix identity requires a > 0");
  // substitute x = a u, then fold [1, inf) onto (0, 1] with u -> 1/u
  auto lower = tanh_sinh([&](double u) { return std::exp(s * std::log(u)) / (1.0 + u); }, 0.0,
                         1.0, cfg.quad_tol);
  auto upper = tanh_sinh([&](double u) { return std::exp((-s - 1.0) * std::log(u)) / (1.0 + u); },
                         0.0, 1.0, cfg.quad_tol);
  const cplx quad = pow_rc(a, s) * (lower.value + upper.value);
  const cplx closed_val = -PI / std::sin(PI * s) * pow_rc(a, s);
  return make_record("appendix_integral", quad, closed_val, 1e-8);
}

}  // namespace acidzeta
