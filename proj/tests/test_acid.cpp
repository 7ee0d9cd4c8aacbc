#include <catch2/catch_amalgamated.hpp>

#include <acidzeta/acid.hpp>
#include <acidzeta/zeroset.hpp>

#include <fstream>
#include <stdexcept>

using namespace acidzeta;

namespace {

const ZeroSet& table() {
  static const ZeroSet zs = [] {
    std::ifstream in("data/zeta_zeros_1e4.txt");
    if (!in.good()) throw std::runtime_error("bundled zero table missing");
    return parse_zero_file(in);
  }();
  return zs;
}

void check_close(cplx got, cplx want, double tol) {
  INFO("got  " << got.real() << " " << got.imag());
  INFO("want " << want.real() << " " << want.imag());
  INFO("tol  " << tol);
  CHECK(std::abs(got - want) <= tol);
}

}  // namespace

TEST_CASE("truncated sums over the bundled table match frozen references") {
  REQUIRE(table().size() == 10000);
  const auto a = zero_sum(cplx(2.5, 0.0), table());
  check_close(a.value, cplx(0.003700722983018909330, 0.0), 5e-15);
  const auto b = zero_sum(cplx(1.5, 5.0), table());
  check_close(b.value, {0.008108498995298540214, -0.008700529410890491459}, 5e-15);
  // the reported error covers the dropped tail beyond the table
  CHECK(a.err > 1e-8);
  CHECK(a.err < 1e-4);

  CHECK_THROWS_AS(zero_sum(cplx(1.0, 0.0), table()), DomainError);
  CHECK_THROWS_AS(zero_sum(cplx(2.5, 0.0), ZeroSet{}), DomainError);
}

TEST_CASE("density tail model bridges a truncated table to the full one") {
  ZeroSet head;
  head.source = table().source;
  head.entries.assign(table().entries.begin(), table().entries.begin() + 5000);
  head.t_max = head.entries.back().lambda;
  for (cplx s : {cplx(1.2, 0.0), cplx(1.5, 5.0), cplx(2.5, 0.0)}) {
    const auto approx = zero_sum(s, head, {TailMode::main_term});
    const auto full = zero_sum(s, table());
    INFO("s = " << s.real() << " + " << s.imag() << "i");
    CHECK(std::abs(approx.value - full.value) <= approx.err + full.err);
  }
}

TEST_CASE("strip transform matches the continuation reference values") {
  const auto r15 = mellin_rep(cplx(1.5, 0.0));
  check_close(r15.value, cplx(0.2477596766848906836, 0.0), r15.err + 1e-12);
  CHECK(r15.err < 5e-7);
  CHECK(std::abs(r15.value.imag()) <= r15.err);

  const auto r12 = mellin_rep(cplx(1.2, 0.0));
  check_close(r12.value, cplx(2.743567860024066443, 0.0), r12.err + 1e-10);

  const auto rc = mellin_rep(cplx(1.5, 2.0));
  check_close(rc.value, {0.01874235977654912424, -0.006268661808189568305}, rc.err + 1e-10);

  CHECK_THROWS_AS(mellin_rep(cplx(0.9, 0.0)), DomainError);
  CHECK_THROWS_AS(mellin_rep(cplx(2.0, 0.0)), DomainError);
  CHECK_THROWS_AS(mellin_rep(cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("explicit continuation reproduces the transform and extends past the strip") {
  const auto T = explicit_terms(cplx(1.5, 0.0));
  check_close(T.term1, cplx(0.0, -2.0), 1e-12);
  check_close(T.term2, cplx(0.5532638401166501847, 0.0), 1e-11);
  check_close(T.term3, {-0.3055041634317595011, 2.0}, T.err3 + 1e-9);

  const auto e15 = explicit_formula(cplx(1.5, 0.0));
  check_close(e15.value, cplx(0.2477596766848906836, 0.0), e15.err + 1e-9);
  const auto m15 = mellin_rep(cplx(1.5, 0.0));
  check_close(e15.value, m15.value, e15.err + m15.err);

  const auto ec = explicit_formula(cplx(1.5, 2.0));
  check_close(ec.value, {0.01874235977654912424, -0.006268661808189568305}, ec.err + 1e-9);

  // the formula continues below the strip, through zero and to negative real part
  const auto e05 = explicit_formula(cplx(0.5, 0.0));
  check_close(e05.value, cplx(1.549059995596196969, 0.0), e05.err + 1e-9);
  const auto em05 = explicit_formula(cplx(-0.5, 0.0));
  check_close(em05.value, cplx(0.7853214818722381007, 0.0), em05.err + 1e-9);

  // the value cannot depend on the contour radius or the ray truncation
  ContourSpec alt;
  alt.r = 0.125;
  alt.x_max = 80.0;
  const auto ea = explicit_formula(cplx(1.5, 2.0), alt);
  check_close(ea.value, ec.value, ea.err + ec.err + 1e-12);
}

TEST_CASE("contour configuration and domain walls are enforced") {
  ContourSpec bad;
  bad.r = 0.6;
  CHECK_THROWS_AS(explicit_terms(cplx(0.5, 0.0), bad), ConfigError);
  bad.r = 0.25;
  bad.x_max = 5.0;
  CHECK_THROWS_AS(explicit_terms(cplx(0.5, 0.0), bad), ConfigError);
  // a short ray cannot certify the tail at strongly negative real part
  bad.x_max = 12.0;
  CHECK_THROWS_AS(explicit_terms(cplx(-2.0, 0.0), bad), ConfigError);

  CHECK_THROWS_AS(explicit_terms(cplx(2.5, 0.0)), DomainError);
  CHECK_THROWS_AS(explicit_terms(cplx(1.0 + 1e-9, 0.0)), PoleError);
  CHECK_THROWS_AS(explicit_terms(cplx(-1.0, 0.0)), PoleError);
}

TEST_CASE("vertical-line growth of the leading continuation term") {
  const std::vector<double> grid{10.0, 12.0, 14.0, 16.0, 18.0, 20.0};
  const auto rep = growth_scan(1.5, grid, table());
  REQUIRE(rep.rows.size() == grid.size());
  // |term1| grows like exp(pi t / 2) on a vertical line
  CHECK(rep.slope_term1 == Catch::Approx(0.5 * PI).epsilon(0.01));
  for (const auto& row : rep.rows) {
    CHECK(row.abs_zero_sum <= rep.zero_sum_bound * (1.0 + 1e-12));
    CHECK(row.err_terms > 0.0);
  }
  CHECK(rep.rows.back().abs_term2 < rep.rows.front().abs_term2);
  // the scan's series column agrees with the standalone sum
  const auto direct = zero_sum(cplx(1.5, 10.0), table());
  CHECK(rep.rows.front().abs_zero_sum == Catch::Approx(std::abs(direct.value)).epsilon(1e-13));

  CHECK_THROWS_AS(growth_scan(1.0, grid, table()), DomainError);
  CHECK_THROWS_AS(growth_scan(1.5, {10.0}, table()), DomainError);
}
