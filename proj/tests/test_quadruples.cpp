#include <doctest.h>

#include <algorithm>

#include "descartes/error.hpp"
#include "descartes/quadruples.hpp"
#include "generators.hpp"

using namespace descartes;

namespace {
Spinor sp(long x, long y) { return {Rational(x), Rational(y)}; }
Rational R(long v) { return Rational(v); }
}  // namespace

TEST_CASE("descartes_residual") {
  CHECK(descartes_residual(R(2), R(3), R(6), R(23)).is_zero());
  CHECK(descartes_residual(R(0), R(0), R(0), R(0)).is_zero());
  CHECK(descartes_residual(R(11), R(14), R(23), R(102)).is_zero());
  CHECK(descartes_residual(R(2), R(3), R(6), R(7)) == Rational(2 * (4 + 9 + 36 + 49) - 18 * 18));
}

TEST_CASE("fourth_curvatures exact roots, larger first") {
  auto r = fourth_curvatures(R(2), R(3), R(6));
  CHECK(r.exact);
  CHECK(*r.larger_exact == R(23));
  CHECK(*r.smaller_exact == R(-1));

  r = fourth_curvatures(R(3), R(14), R(6));
  CHECK(*r.larger_exact == R(47));
  CHECK(*r.smaller_exact == R(-1));

  r = fourth_curvatures(R(1), R(1), R(0));
  CHECK(*r.larger_exact == R(4));
  CHECK(*r.smaller_exact == R(0));
}

TEST_CASE("fourth_curvatures falls back to doubles for irrational roots") {
  const auto r = fourth_curvatures(R(1), R(1), R(1));
  CHECK_FALSE(r.exact);
  CHECK_FALSE(r.larger_exact.has_value());
  CHECK(r.larger == doctest::Approx(3.0 + 2.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.smaller == doctest::Approx(3.0 - 2.0 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("fourth_curvatures rejects complex solutions") {
  try {
    fourth_curvatures(R(1), R(1), R(-1));
    FAIL("expected ComplexSolutions");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ComplexSolutions);
  }
}

TEST_CASE("from_spinor_pair") {
  auto f = from_spinor_pair(sp(3, 0), sp(-1, 2));
  CHECK(f.quadruple_1 == DescartesQuadruple{R(2), R(6), R(3), R(23)});
  CHECK(f.D2() == R(-1));

  f = from_spinor_pair(sp(1, 0), sp(0, 1));
  CHECK(f.quadruple_1 == DescartesQuadruple{R(1), R(1), R(0), R(4)});
  CHECK(f.D2() == R(0));

  f = from_spinor_pair(sp(2, 1), sp(1, -3));
  CHECK(f.quadruple_1 == DescartesQuadruple{R(9), R(4), R(1), R(28)});
  CHECK(f.D2() == R(0));
  CHECK(descartes_residual(f.quadruple_1).is_zero());
  CHECK(descartes_residual(f.quadruple_2).is_zero());
}

TEST_CASE("from_spinor_pair accepts degenerate spinors") {
  const auto f = from_spinor_pair(sp(0, 0), sp(0, 0));
  CHECK(f.quadruple_1 == DescartesQuadruple{R(0), R(0), R(0), R(0)});
  const auto g = from_spinor_pair(sp(1, 0), sp(-1, 0));
  CHECK(g.quadruple_1 == DescartesQuadruple{R(0), R(0), R(1), R(1)});
  CHECK(descartes_residual(g.quadruple_1).is_zero());
}

TEST_CASE("from_spinor_triple") {
  auto t = from_spinor_triple(sp(3, 0), sp(-1, 2), sp(-2, -2));
  CHECK(t.A == R(2));
  CHECK(t.B == R(6));
  CHECK(t.C == R(3));
  CHECK(t.D1 == R(23));
  CHECK(t.D2 == R(-1));

  t = from_spinor_triple(sp(1, 0), sp(0, 1), sp(-1, -1));
  CHECK(t.A == R(1));
  CHECK(t.B == R(1));
  CHECK(t.C == R(0));
  CHECK(t.D1 == R(4));
  CHECK(t.D2 == R(0));

  try {
    from_spinor_triple(sp(1, 0), sp(0, 1), sp(0, 0));
    FAIL("expected CurlViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CurlViolation);
  }
}

TEST_CASE("canonicalize") {
  auto c = canonicalize({R(2), R(6), R(3), R(23)});
  CHECK(c.sorted == std::array<Rational, 4>{R(2), R(3), R(6), R(23)});
  CHECK(c.is_primitive);
  CHECK(c.key() == "2,3,6,23");

  c = canonicalize({R(4), R(4), R(0), R(16)});
  CHECK(c.sorted == std::array<Rational, 4>{R(0), R(4), R(4), R(16)});
  CHECK_FALSE(c.is_primitive);
  CHECK(c.primitive == std::array<Rational, 4>{R(0), R(1), R(1), R(4)});
  CHECK(descartes_residual(c.primitive[0], c.primitive[1], c.primitive[2], c.primitive[3]).is_zero());

  c = canonicalize({R(-1), R(2), R(3), R(6)});
  CHECK(c.key() == "-1,2,3,6");

  try {
    canonicalize({Rational::parse("1/2"), R(1), R(1), R(1)});
    FAIL("expected NonIntegral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegral);
  }
}

TEST_CASE("property: spinor-pair quadruples") {
  testing::Gen gen(0x5EED0002);
  for (int i = 0; i < 20000; ++i) {
    const Spinor a = gen.integer_spinor(50);
    const Spinor b = gen.integer_spinor(50);
    const auto f = from_spinor_pair(a, b);
    REQUIRE(descartes_residual(f.quadruple_1).is_zero());
    REQUIRE(descartes_residual(f.quadruple_2).is_zero());
    REQUIRE(f.D1() >= f.D2());
    const Spinor c = -a - b;
    REQUIRE(f.D1() + f.D2() == norm_sq(a) + norm_sq(b) + norm_sq(c));
    REQUIRE(f.D1() - f.D2() == abs(Rational(4) * cross(a, b)));

    // The triple form agrees, with D1 - D2 = 4 a x b signed.
    const auto t = from_spinor_triple(a, b, c);
    REQUIRE(t.A == f.quadruple_1.A);
    REQUIRE(t.B == f.quadruple_1.B);
    REQUIRE(t.C == f.quadruple_1.C);
    REQUIRE(std::max(t.D1, t.D2) == f.D1());
    REQUIRE(std::min(t.D1, t.D2) == f.D2());
    REQUIRE(t.D1 - t.D2 == Rational(4) * cross(a, b));

    // Scaling by k scales every curvature by k^2.
    const Rational k(gen.integer(-4, 4));
    const auto scaled = from_spinor_pair(k * a, k * b);
    REQUIRE(scaled.quadruple_1.A == k * k * f.quadruple_1.A);
    REQUIRE(scaled.D1() == k * k * f.D1());
    REQUIRE(scaled.D2() == k * k * f.D2());

    // Any Apollonian move lands on another Descartes quadruple.
    for (int idx = 0; idx < 4; ++idx) {
      REQUIRE(descartes_residual(apollonian_move(f.quadruple_1, idx)).is_zero());
    }
  }
}

TEST_CASE("Apollonian move on the third root re-lands on the other fourth curvature") {
  const DescartesQuadruple q{R(2), R(3), R(6), R(23)};
  CHECK(apollonian_move(q, 3) == DescartesQuadruple{R(2), R(3), R(6), R(-1)});
  CHECK(apollonian_move(apollonian_move(q, 0), 0) == q);
}

TEST_CASE("family JSON") {
  const auto j = to_json(from_spinor_pair(sp(3, 0), sp(-1, 2)));
  CHECK(j["a"] == "3,0");
  CHECK(j["b"] == "-1,2");
  CHECK(j["A"] == "2");
  CHECK(j["B"] == "6");
  CHECK(j["C"] == "3");
  CHECK(j["D1"] == "23");
  CHECK(j["D2"] == "-1");
}
