#include <catch2/catch_amalgamated.hpp>

#include <acidzeta/gammafn.hpp>

using acidzeta::cplx;

namespace {
void check_close(cplx got, cplx want, double tol) {
  INFO("got  " << got.real() << " " << got.imag());
  INFO("want " << want.real() << " " << want.imag());
  CHECK(std::abs(got - want) <= tol);
}
double rtol(cplx want) { return 1e-12 * (1.0 + std::abs(want)); }
}  // namespace

TEST_CASE("log gamma matches reference values on both half planes") {
  using acidzeta::log_gamma;
  struct Row {
    cplx z, want;
  };
  const Row rows[] = {
      {{2.5, 3.0}, {-1.470954610348841691305499, 2.822615638260799450025266}},
      {{-1.25, 0.5}, {0.2101193196213740758808079, -5.248502107288055205354588}},
      {{1.25, 0.5}, {-0.241324984494420644130715, -0.08803429209349979821343736}},
      {{-1.25, 5.0}, {-9.783434693206151351046945, 0.005443483915931023575368675}},
      {{-5.75, -2.25}, {-10.9507051772128195990217, 15.46270858510706735689095}},
      {{0.25, 2500.0}, {-3928.027889955500948334583, 17059.72233222569824532784}},
      {{0.25, 7.067362}, {-10.67116264932371004420478, 6.361549786124762545318539}},
      {{1.25, 50.0}, {-74.6868449274299438412431, 146.774455892718166629713}},
  };
  for (const auto& r : rows) check_close(log_gamma(r.z), r.want, rtol(r.want));
  check_close(log_gamma(cplx(0.5, 0.0)), cplx(0.57236494292470008707171367, 0.0), 1e-14);
}

TEST_CASE("log gamma satisfies the recurrence without branch jumps") {
  using acidzeta::log_gamma;
  for (cplx z : {cplx(0.3, 0.7), cplx(2.5, -3.0), cplx(0.1, 20.0), cplx(7.0, 0.25)}) {
    const cplx lhs = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    check_close(lhs, 0.0, 1e-13 * (1.0 + std::abs(log_gamma(z))));
  }
}

TEST_CASE("digamma matches reference values") {
  using acidzeta::digamma;
  check_close(digamma(cplx(1.25, 0.0)), cplx(-0.2274535333762654080895301, 0.0), 1e-14);
  check_close(digamma(cplx(2.5, 3.0)),
              {1.281273919066231427140705, 0.9798053153445596376223948}, 1e-13);
  check_close(digamma(cplx(-1.25, 0.5)),
              {0.8802538165591444251817212, 2.857714703182447184569376}, 1e-13);
}

TEST_CASE("trigamma matches reference values") {
  using acidzeta::trigamma;
  check_close(trigamma(cplx(1.25, 0.0)), cplx(1.197329154507110739271319, 0.0), 1e-13);
  check_close(trigamma(cplx(2.0, 0.0)), cplx(0.6449340668482264364724152, 0.0), 1e-13);
  check_close(trigamma(cplx(2.5, 3.0)),
              {0.1555978884719455319930904, -0.2303795530823235300169676}, 1e-13);
  check_close(trigamma(cplx(1.5, 2.0)),
              {0.2076812936462222325662622, -0.4008945145894837183163706}, 1e-13);
}

TEST_CASE("derivative ladder is internally consistent") {
  using namespace acidzeta;
  const cplx z(1.7, 0.9);
  const double h = 1e-5;
  const cplx fd_psi = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
  check_close(fd_psi, digamma(z), 1e-9);
  const cplx fd_tri = (digamma(z + h) - digamma(z - h)) / (2.0 * h);
  check_close(fd_tri, trigamma(z), 1e-9);
}

TEST_CASE("nonpositive integers are rejected") {
  using namespace acidzeta;
  CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(digamma(cplx(-3.0, 0.0)), DomainError);
  CHECK_THROWS_AS(trigamma(cplx(-1.0, 0.0)), DomainError);
  CHECK_NOTHROW(log_gamma(cplx(-3.0, 1e-6)));
}
