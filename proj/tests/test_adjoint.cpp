#include <catch2/catch_amalgamated.hpp>

#include <acidzeta/adjoint.hpp>
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

TEST_CASE("adjoint zero sums match frozen references and handle multiplicity") {
  const auto a = zero_sum_adjoint(cplx(2.5, 0.0), table());
  check_close(a.value, cplx(0.003700722983018909330, 0.0), 5e-15);
  const auto b = zero_sum_adjoint(cplx(1.5, 5.0), table());
  check_close(b.value, {0.008108498995298540214, -0.008700529410890491459}, 5e-15);
  CHECK(a.err > 1e-8);
  CHECK(a.err < 1e-4);

  // a doubled ordinate counts twice
  ZeroSet two;
  two.entries = {{20.0, 0.5, 2}};
  two.t_max = 20.0;
  const auto c = zero_sum_adjoint(cplx(2.0, 0.0), two);
  check_close(c.value, cplx(2.0 / 400.0, 0.0), 1e-15);

  CHECK_THROWS_AS(zero_sum_adjoint(cplx(1.0, 0.0), table()), DomainError);
  CHECK_THROWS_AS(zero_sum_adjoint(cplx(2.5, 0.0), ZeroSet{}), DomainError);
}

TEST_CASE("gamma-factor argument readings match frozen references") {
  check_close(cplx(m_func(1.0, Variant::audited), 0.0), cplx(-0.210211605334505632, 0.0), 5e-14);
  check_close(cplx(m_func(1.0, Variant::literal), 0.0), cplx(-1.488460688568293220, 0.0), 5e-14);
  check_close(cplx(m_func(14.1, Variant::audited), 0.0), cplx(-0.066008531042594427, 0.0), 5e-14);
  check_close(cplx(m_func_deriv(1.0, 1), 0.0), cplx(-0.194988072642634536, 0.0), 5e-13);
  check_close(cplx(m_func_deriv(1.0, 2), 0.0), cplx(0.041569828588374921, 0.0), 5e-13);
  CHECK_THROWS_AS(m_func_deriv(1.0, 3), DomainError);
}

TEST_CASE("boundary-argument transform closed form matches frozen references") {
  check_close(arg_term_closed(cplx(1.5, 0.0)).value, cplx(2.0, 0.0), 1e-14);
  check_close(arg_term_closed(cplx(2.5, 0.0)).value, cplx(4.0, 0.0), 1e-13);
  check_close(arg_term_closed(cplx(0.3, 0.0)).value, cplx(-0.69087283870698112022, 0.0), 1e-14);
  check_close(arg_term_closed(cplx(-0.5, 0.0)).value, cplx(-0.5, 0.0), 1e-14);
  check_close(arg_term_closed(cplx(2.5, 3.0)).value,
              {-0.04888233761693989109, 0.01388890256772283686}, 1e-14);
  // the printed reading carries the opposite sign
  check_close(arg_term_closed(cplx(1.5, 0.0), Variant::literal).value, cplx(-2.0, 0.0), 1e-14);
  CHECK_THROWS_AS(arg_term_closed(cplx(1.0, 0.0)), PoleError);
  CHECK_THROWS_AS(arg_term_closed(cplx(3.0, 0.0)), PoleError);
}

TEST_CASE("boundary-argument transform quadrature agrees with the closed form") {
  for (cplx s : {cplx(0.3, 0.0), cplx(1.5, 0.0), cplx(2.5, 3.0), cplx(-0.5, 0.0), cplx(1.5, 2.0)}) {
    INFO("s = " << s.real() << " + " << s.imag() << "i");
    const auto q = arg_term_quad(s);
    const auto c = arg_term_closed(s);
    CHECK(std::abs(q.value - c.value) <= std::max(1e-11, 3.0 * q.err));
  }
  CHECK_THROWS_AS(arg_term_quad(cplx(3.2, 0.0)), DomainError);
  CHECK_THROWS_AS(arg_term_quad(cplx(1.0, 0.0)), PoleError);
}

TEST_CASE("Mellin transfer between the argument curvature and the pair kernel") {
  for (cplx s : {cplx(1.2, 0.0), cplx(1.5, 0.0), cplx(1.8, 0.0), cplx(1.2, 0.3)}) {
    INFO("s = " << s.real() << " + " << s.imag() << "i");
    const auto sides = lemma3_sides(s);
    CHECK(std::abs(sides.lhs.value - sides.rhs.value) <= sides.lhs.err + sides.rhs.err);
    CHECK(sides.lhs.err + sides.rhs.err < 1e-3);
  }
  CHECK_THROWS_AS(lemma3_sides(cplx(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(lemma3_sides(cplx(2.0, 0.0)), DomainError);
}

TEST_CASE("counting-decomposition continuation reproduces the adjoint sum") {
  const auto p15 = half_explicit_parts(cplx(1.5, 0.0), table());
  check_close(p15.cf_arg, cplx(2.0, 0.0), 1e-12);
  check_close(p15.cf_m, cplx(0.5532638401166501847, 0.0), 1e-10);
  CHECK(p15.err < 1e-7);
  check_close(p15.total(), cplx(0.2477596766848906836, 0.0), 1e-8);
  // the reported error really covers the distance to the reference
  CHECK(std::abs(p15.total() - cplx(0.2477596766848906836, 0.0)) <= p15.err + 1e-9);

  // inside the common domain the two continuations must agree within errors
  for (cplx s : {cplx(1.5, 0.0), cplx(2.5, 0.0), cplx(1.5, 2.0)}) {
    INFO("s = " << s.real() << " + " << s.imag() << "i");
    const auto he = half_explicit(s, table());
    const auto zsa = zero_sum_adjoint(s, table(), {TailMode::main_term});
    CHECK(std::abs(he.value - zsa.value) <= he.err + zsa.err + 1e-9);
  }
  const auto he25 = half_explicit(cplx(2.5, 0.0), table());
  check_close(he25.value, cplx(0.003701590512, 0.0), 1e-9);
}

TEST_CASE("counting-decomposition continuation extends below the sum's domain") {
  const auto h05 = half_explicit(cplx(0.5, 0.0), table());
  CHECK(h05.err < 1e-4);
  check_close(h05.value, cplx(1.549059995596196969, 0.0), h05.err);
  const auto hm05 = half_explicit(cplx(-0.5, 0.0), table());
  CHECK(hm05.err < 0.5);
  check_close(hm05.value, cplx(0.785321481872238101, 0.0), hm05.err);
  const auto hc = half_explicit(cplx(1.5, 2.0), table());
  check_close(hc.value, {0.01874235977654912424, -0.00626866180818956830},
              std::max(hc.err, 1e-8));
}

TEST_CASE("literal variant of the continuation diverges from the audited one") {
  const auto aud = half_explicit(cplx(1.5, 0.0), table());
  HalfExplicitParams lp;
  lp.variant = Variant::literal;
  const auto lit = half_explicit(cplx(1.5, 0.0), table(), lp);
  CHECK(std::abs(lit.value - aud.value) > 1.0);
}

TEST_CASE("continuation is stable under its bookkeeping parameters") {
  const auto base = half_explicit(cplx(1.5, 0.0), table());
  HalfExplicitParams up;
  up.s1_upper = 541.85;
  const auto trunc = half_explicit(cplx(1.5, 0.0), table(), up);
  CHECK(std::abs(trunc.value - base.value) <= 1e-5);
  HalfExplicitParams pc;
  pc.c1 = 0.5;
  const auto shifted = half_explicit(cplx(1.5, 0.0), table(), pc);
  CHECK(std::abs(shifted.value - base.value) <= 1e-8);
}

TEST_CASE("continuation rejects arguments outside its strip") {
  CHECK_THROWS_AS(half_explicit(cplx(3.0, 0.0), table()), DomainError);
  CHECK_THROWS_AS(half_explicit(cplx(-1.0, 0.0), table()), DomainError);
  CHECK_THROWS_AS(half_explicit(cplx(1.0, 0.0), table()), PoleError);
  CHECK_THROWS_AS(half_explicit(cplx(1.0 + 1e-9, 0.0), table()), PoleError);
  CHECK_THROWS_AS(half_explicit(cplx(1.5, 0.0), ZeroSet{}), DomainError);
  ZeroSet low;
  low.entries = {{0.5, 0.5, 1}};
  low.t_max = 0.5;
  CHECK_THROWS_AS(half_explicit(cplx(1.5, 0.0), low), DomainError);
}
