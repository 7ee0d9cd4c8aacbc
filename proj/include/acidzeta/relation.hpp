#pragma once

#include <cmath>
#include <vector>

#include "acidzeta/core.hpp"
#include "acidzeta/zeroset.hpp"

namespace acidzeta {

struct OffLinePerturbation {
  double sigma = 0.5;
  double lambda = 0.0;
  int multiplicity = 1;
};

struct CorrectionSeriesParams {
  int n_max = 40;
};

namespace detail {

// sum over n >= 1 of (-1)^n (s)_{2n}/(2n)! x^{2n}, x = (sigma - 1/2)/lambda;
// the ratio of consecutive terms tends to -x^2, so |x| < 1/2 keeps it geometric
struct SeriesSum {
  cplx value{};
  double err = 0.0;
};

inline SeriesSum deviation_series(cplx s, double x2, const CorrectionSeriesParams& p) {
  cplx u = -0.5 * s * (s + 1.0) * x2;
  cplx acc = u;
  double ratio = 0.0;
  for (int n = 1; n < p.n_max; ++n) {
    const cplx step = -(s + double(2 * n)) * (s + double(2 * n + 1)) /
                      double((2 * n + 1) * (2 * n + 2)) * x2;
    u *= step;
    acc += u;
    ratio = std::abs(step);
    if (std::abs(u) < 1e-18 * (1.0 + std::abs(acc)) && ratio < 1.0) break;
  }
  double tail = std::abs(u);
  if (ratio < 1.0) tail *= ratio / (1.0 - ratio);
  return {acc, tail + 1e-16 * std::abs(acc)};
}

}  // namespace detail

// exact cost of a mirrored off-line pair (sigma, lambda), (1-sigma, lambda) relative
// to a double zero on the line: pair sum minus 2 lambda^{-s}
inline EvalResult pair_correction(cplx s, const OffLinePerturbation& pert,
                                  const CorrectionSeriesParams& p = {}) {
  if (!(pert.lambda > 0.0)) throw DomainError("perturbation ordinate must be positive");
  if (!(pert.sigma > 0.0 && pert.sigma < 1.0))
    throw DomainError("perturbation abscissa must lie in the critical strip");
  const double x = (pert.sigma - 0.5) / pert.lambda;
  if (!(std::abs(x) < 0.5)) throw DomainError("perturbation ratio must satisfy |x| < 1/2");
  const auto S = detail::deviation_series(s, x * x, p);
  const cplx pref = 2.0 * double(pert.multiplicity) * std::exp(-s * std::log(pert.lambda));
  return {pref * S.value, std::abs(pref) * S.err, Method::series};
}

// direct evaluation of the same pair cost from the two power terms
inline cplx pair_correction_direct(cplx s, const OffLinePerturbation& pert) {
  const double d = pert.sigma - 0.5;
  const cplx a = std::exp(-s * std::log(cplx(pert.lambda, -d)));
  const cplx b = std::exp(-s * std::log(cplx(pert.lambda, d)));
  const cplx c = std::exp(-s * std::log(cplx(pert.lambda, 0.0)));
  return double(pert.multiplicity) * (a + b - 2.0 * c);
}

// gap between the acid sum over the given zeros and the sum with every zero moved
// onto the line; each entry contributes half a pair
inline EvalResult set_gap(cplx s, const ZeroSet& zs, const CorrectionSeriesParams& p = {}) {
  cplx acc = 0.0;
  double err = 0.0;
  for (const auto& e : zs.entries) {
    if (e.sigma == 0.5) continue;
    const double x = (e.sigma - 0.5) / e.lambda;
    if (!(std::abs(x) < 0.5)) throw DomainError("zero set deviation out of series range");
    const auto S = detail::deviation_series(s, x * x, p);
    const cplx pref = double(e.multiplicity) * std::exp(-s * std::log(e.lambda));
    acc += pref * S.value;
    err += std::abs(pref) * S.err;
  }
  return {acc, err, Method::series};
}

inline EvalResult integer_point_gap(int n, const ZeroSet& zs,
                                    const CorrectionSeriesParams& p = {}) {
  if (n < 2) throw DomainError("integer_point_gap requires n >= 2");
  return set_gap(cplx(double(n), 0.0), zs, p);
}

// derivative of the gap at s = 0 in closed form: half of sum over off-line zeros of
// log(1 + x^2); nonnegative, and zero exactly when every zero sits on the line
inline double rh_gap_derivative(const ZeroSet& zs) {
  double acc = 0.0;
  for (const auto& e : zs.entries) {
    if (e.sigma == 0.5) continue;
    const double x = (e.sigma - 0.5) / e.lambda;
    acc += 0.5 * double(e.multiplicity) * std::log1p(x * x);
  }
  return acc;
}

// add mirrored synthetic pairs to a zero set; collisions with existing entries are
// rejected rather than merged
inline ZeroSet inject_offline(const ZeroSet& zs, const std::vector<OffLinePerturbation>& perts) {
  ZeroSet out = zs;
  for (const auto& pert : perts) {
    if (!(pert.lambda > 0.0)) throw DomainError("perturbation ordinate must be positive");
    if (!(pert.sigma > 0.0 && pert.sigma < 1.0))
      throw DomainError("perturbation abscissa must lie in the critical strip");
    if (pert.multiplicity < 1) throw DomainError("perturbation multiplicity must be >= 1");
    for (double sg : {pert.sigma, 1.0 - pert.sigma}) {
      for (const auto& e : out.entries)
        if (e.lambda == pert.lambda && e.sigma == sg)
          throw DomainError("synthetic zero collides with an existing entry");
      out.entries.push_back({pert.lambda, sg, pert.multiplicity});
      if (pert.sigma == 0.5) break;
    }
    out.t_max = std::max(out.t_max, pert.lambda);
  }
  sort_entries(out.entries);
  out.source = ZeroSource::synthetic;
  validate(out);
  return out;
}

}  // namespace acidzeta
