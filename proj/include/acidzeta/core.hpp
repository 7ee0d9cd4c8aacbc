#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace acidzeta {

using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double LN_PI = 1.144729885849400174143427351353058712;
inline constexpr double LN_2PI = 1.837877066409345483560659472811235279;
inline constexpr double EULER_GAMMA = 0.577215664901532860606512090082402431;

enum class Method {
  series,
  euler_maclaurin,
  quadrature,
  closed_form,
  dirichlet_series,
  rational_in_zeta,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
    case Method::dirichlet_series: return "dirichlet_series";
    case Method::rational_in_zeta: return "rational_in_zeta";
  }
  return "unknown";
}

struct EvalResult {
  cplx value{};
  double err = 0.0;  // estimated absolute error, finite and >= 0
  Method method = Method::closed_form;
};

inline EvalResult closed(cplx v) {
  return {v, 1e-14 * std::abs(v) + 1e-300, Method::closed_form};
}

struct PrecisionConfig {
  double quad_tol = 1e-10;
  int em_terms = 64;
  int em_bernoulli = 12;  // must be even
  long series_max = 1000000;
};

// error kinds drive CLI exit codes: parse/invariant -> 2, domain/pole/range/config -> 3
struct AzError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : AzError { using AzError::AzError; };
struct PoleError : AzError { using AzError::AzError; };
struct RangeError : AzError { using AzError::AzError; };
struct ParseError : AzError { using AzError::AzError; };
struct ConfigError : AzError { using AzError::AzError; };
struct InvariantError : AzError { using AzError::AzError; };

inline void validate(const PrecisionConfig& cfg) {
  if (!(cfg.quad_tol >= 1e-14 && cfg.quad_tol <= 1e-2))
    throw ConfigError("quad_tol must lie in [1e-14, 1e-2]");
  if (cfg.em_bernoulli <= 0 || cfg.em_bernoulli % 2 != 0 || cfg.em_bernoulli > 32)
    throw ConfigError("em_bernoulli must be a positive even integer <= 32");
  if (cfg.em_terms < 4) throw ConfigError("em_terms must be >= 4");
  if (cfg.series_max < 1000) throw ConfigError("series_max must be >= 1000");
}

// one audited comparison: a left and right side, their gap, and the budget it must meet
struct VerificationRecord {
  std::string name;
  cplx lhs{};
  cplx rhs{};
  double diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

inline VerificationRecord make_record(std::string name, cplx lhs, cplx rhs, double tol,
                                      std::string note = {}) {
  VerificationRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.diff = std::abs(lhs - rhs);
  r.tol = tol;
  r.pass = r.diff < tol;
  r.note = std::move(note);
  return r;
}

// B_2, B_4, ..., B_32
inline constexpr double BERNOULLI_EVEN[16] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

// Laurent coefficients of zeta about s = 1: zeta(s) = 1/(s-1) + sum_k (-1)^k g_k (s-1)^k / k!
inline constexpr double STIELTJES[15] = {
    0.5772156649015328606065121,
    -0.07281584548367672486058638,
    -0.009690363192872318484530386,
    0.002053834420303345866160047,
    0.00232537006546730005746817,
    0.0007933238173010627017533349,
    -0.0002387693454301996098724218,
    -0.0005272895670577510460740975,
    -0.0003521233538030395096020522,
    -0.00003439477441808804817791462,
    0.0002053328149090647946837223,
    0.0002701844395439035266729021,
    0.0001672729121051401933535015,
    -0.0000274638066037601588600076,
    -0.0002092092620592999458371397,
};

// t > 0 assumed; principal power
inline cplx pow_rc(double t, cplx s) { return std::exp(s * std::log(t)); }

inline cplx cis(double x) { return {std::cos(x), std::sin(x)}; }

// round to 12 significant digits; reports and zero tables serialize at this precision
inline double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

inline std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

}  // namespace acidzeta
