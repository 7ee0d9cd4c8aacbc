#include <catch2/catch_amalgamated.hpp>

#include <acidzeta/adjoint.hpp>
#include <acidzeta/counting.hpp>
#include <acidzeta/zerofind.hpp>
#include <acidzeta/zeroset.hpp>

using namespace acidzeta;

TEST_CASE("zero tables parse, merge multiplicity and round-trip") {
  const std::string text =
      "# header comment\n"
      "\n"
      "14.5\n"
      "14.5\n"
      "  17.25 \n"
      "21.0 0.4\n"
      "21.0 0.6\n";
  const ZeroSet zs = parse_zero_file(text);
  REQUIRE(zs.size() == 4);
  CHECK(zs.entries[0].lambda == 14.5);
  CHECK(zs.entries[0].multiplicity == 2);
  CHECK(zs.entries[0].sigma == 0.5);
  CHECK(zs.entries[1].lambda == 17.25);
  CHECK(zs.entries[2].sigma == 0.4);
  CHECK(zs.entries[3].sigma == 0.6);
  CHECK(zs.source == ZeroSource::file);
  CHECK(zs.t_max == 21.0);

  const std::string dumped = serialize(zs, "3 ordinates");
  CHECK(dumped.rfind("# 3 ordinates\n", 0) == 0);
  const ZeroSet back = parse_zero_file(dumped);
  REQUIRE(back.entries == zs.entries);
  // serialization is deterministic byte for byte
  CHECK(serialize(back, "3 ordinates") == dumped);
}

TEST_CASE("zero table rejects malformed and inconsistent input") {
  CHECK_THROWS_AS(parse_zero_file("14.1 0.6 7\n"), ParseError);
  CHECK_THROWS_AS(parse_zero_file("abc\n"), ParseError);
  CHECK_THROWS_AS(parse_zero_file("21.0\n14.1\n"), ParseError);
  CHECK_THROWS_AS(parse_zero_file("-3.0\n"), ParseError);
  CHECK_THROWS_AS(parse_zero_file("14.1 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_zero_file("14.5 0.6\n14.5 0.4\n"), ParseError);
  // an off-line entry without its mirrored partner breaks the set invariant
  CHECK_THROWS_AS(parse_zero_file("14.5 0.4\n"), InvariantError);
}

TEST_CASE("gamma-factor phase and hardy function match reference values") {
  CHECK(theta(100.0) == Catch::Approx(87.97216523178721963).epsilon(1e-13));
  // centred difference against the closed derivative of the phase
  const double h = 1e-3;
  const double fd = (theta(100.0 + h) - theta(100.0 - h)) / (2.0 * h);
  CHECK(fd == Catch::Approx(1.383644476419579353).epsilon(1e-9));
  CHECK(hardy_z(100.0) == Catch::Approx(2.692697056664463475).epsilon(1e-11));
  CHECK(hardy_z(6.5) == Catch::Approx(-0.9973476949809396400).epsilon(1e-11));
  CHECK_THROWS_AS(theta(-1.0), DomainError);
}

TEST_CASE("zero search certifies the table below 100") {
  const ZeroSet zs = compute_zeros(100.0);
  REQUIRE(zs.size() == 29);
  CHECK(zs.source == ZeroSource::computed);
  CHECK(zs.t_max == 100.0);
  CHECK(zs.entries[0].lambda == Catch::Approx(14.13472514173469379).margin(1e-9));
  CHECK(zs.entries[1].lambda == Catch::Approx(21.02203963877155499).margin(1e-9));
  CHECK(zs.entries[28].lambda == Catch::Approx(98.83119421819369223).margin(1e-9));
  for (const auto& e : zs.entries) {
    CHECK(std::abs(hardy_z(e.lambda)) < 1e-7);
    CHECK(std::abs(zeta_half(e.lambda)) < 1e-8);
    CHECK(e.sigma == 0.5);
    CHECK(e.multiplicity == 1);
  }
  // a deliberately coarse scan still recovers every ordinate via the deficit rescan
  const ZeroSet coarse = compute_zeros(120.0, {}, 0.4);
  CHECK(coarse.size() == 38);
  CHECK_THROWS_AS(compute_zeros(10.0), DomainError);
  CHECK_THROWS_AS(compute_zeros(20000.0), RangeError);
}

TEST_CASE("counting functions reconstruct the integer staircase") {
  const ZeroSet zs = compute_zeros(100.0);
  CHECK(count_N(14.13, zs) == 0.0);
  CHECK(count_N(14.14, zs) == 1.0);
  CHECK(count_N(99.9, zs) == 29.0);
  CHECK_THROWS_AS(count_N(101.0, zs), RangeError);

  CHECK(s0(1.0, zs) == Catch::Approx(-0.4373720123159276419).epsilon(1e-12));

  ZeroCountFns fns(zs);
  CHECK(fns.count(50.0) == 10.0);
  CHECK(fns.s0(1.0) == Catch::Approx(s0(1.0, zs)).epsilon(1e-14));
  CHECK(fns.s1(0.0, 0.25) == 0.25);
  CHECK(fns.s1(1.0) == Catch::Approx(-0.6685578698429009272).epsilon(1e-10));
  CHECK(fns.s1(1.0, 0.5) == Catch::Approx(-0.6685578698429009272 + 0.5).epsilon(1e-10));
  CHECK_THROWS_AS(fns.s1(200.0), RangeError);

  // the phase identity reassembles the exact count at off-grid heights
  for (double t : {10.0, 14.2, 30.0, 97.5}) {
    const auto d = garg_decomposition(t, zs);
    CHECK(d.total == Catch::Approx(PI * d.n_value).margin(1e-8));
  }
  CHECK(garg_decomposition(14.2, zs).n_value == 1.0);
  CHECK(garg_decomposition(10.0, zs).n_value == 0.0);
}
