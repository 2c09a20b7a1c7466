#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "descartes/error.hpp"
#include "descartes/quadruples.hpp"
#include "descartes/tessellation.hpp"
#include "generators.hpp"

using namespace descartes;

namespace {

Spinor sp(long x, long y) { return {Rational(x), Rational(y)}; }
Rational R(long v) { return Rational(v); }

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Rational> class_areas(const Tessellation& t, TileClass cls, bool absolute = false) {
  std::vector<Rational> out;
  for (const auto& tile : t.tiles) {
    if (tile.cls == cls) out.push_back(absolute ? abs(tile.signed_area) : tile.signed_area);
  }
  return sorted(out);
}

// Independent lattice-point oracle: even-odd ray casting for the interior and
// an explicit segment test for the boundary.
struct LatticeCount {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
};

LatticeCount count_by_ray_casting(const Tile& t) {
  std::array<std::array<std::int64_t, 2>, 4> p{};
  const auto v = t.vertices();
  for (int i = 0; i < 4; ++i) p[i] = {v[i].x.to_int64(), v[i].y.to_int64()};
  std::int64_t x0 = p[0][0], x1 = p[0][0], y0 = p[0][1], y1 = p[0][1];
  for (const auto& q : p) {
    x0 = std::min(x0, q[0]);
    x1 = std::max(x1, q[0]);
    y0 = std::min(y0, q[1]);
    y1 = std::max(y1, q[1]);
  }
  LatticeCount out;
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      bool on_boundary = false;
      bool inside = false;
      for (int i = 0, j = 3; i < 4; j = i++) {
        const auto& a = p[j];
        const auto& b = p[i];
        const std::int64_t cr = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if (cr == 0 && (x - a[0]) * (x - b[0]) <= 0 && (y - a[1]) * (y - b[1]) <= 0) on_boundary = true;
        if ((a[1] > y) != (b[1] > y)) {
          // x < crossing abscissa, compared without division
          const std::int64_t lhs = (x - a[0]) * (b[1] - a[1]);
          const std::int64_t rhs = (b[0] - a[0]) * (y - a[1]);
          if ((b[1] - a[1] > 0) ? lhs < rhs : lhs > rhs) inside = !inside;
        }
      }
      if (on_boundary) {
        ++out.boundary;
      } else if (inside) {
        ++out.interior;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("worked example a=(3,0), b=(-1,2)") {
  const auto t = build_tessellation(sp(3, 0), sp(-1, 2));
  REQUIRE(t.tiles.size() == 15);
  CHECK(t.c == sp(-2, -2));
  CHECK(class_areas(t, TileClass::YellowSquare) == sorted({R(9), R(5), R(8)}));
  CHECK(class_areas(t, TileClass::RedCentral) == sorted({R(3), R(2), R(6)}));
  CHECK(class_areas(t, TileClass::Green) == std::vector<Rational>(6, R(6)));
  CHECK(class_areas(t, TileClass::LightRed) == sorted({R(2), R(3), R(6)}));
  CHECK_FALSE(t.has_overlap());

  const auto r = summarize(t);
  CHECK(r.red_areas == std::array<Rational, 3>{R(2), R(6), R(3)});
  CHECK(r.green_area == R(6));
  CHECK(r.curvature_D == R(23));
  CHECK(r.curvature_Dprime == R(-1));
  CHECK(r.midcircle_ABC == R(6));
  CHECK(sorted({r.midcircles_with_D.begin(), r.midcircles_with_D.end()}) == sorted({R(11), R(14), R(15)}));
  CHECK(sorted({r.midcircles_with_Dprime.begin(), r.midcircles_with_Dprime.end()}) ==
        sorted({R(-1), R(2), R(3)}));
  CHECK(r.descartes_residual_D.is_zero());
  CHECK(r.descartes_residual_Dprime.is_zero());
  CHECK(r.square_plus_aligned_red == R(11));
}

TEST_CASE("unit spinors a=(1,0), b=(0,1)") {
  const auto t = build_tessellation(sp(1, 0), sp(0, 1));
  CHECK(class_areas(t, TileClass::YellowSquare) == sorted({R(1), R(1), R(2)}));
  CHECK(class_areas(t, TileClass::Green) == std::vector<Rational>(6, R(1)));
  const auto r = summarize(t);
  CHECK(r.red_areas == std::array<Rational, 3>{R(1), R(1), R(0)});
  CHECK(r.curvature_D == R(4));
  CHECK(r.curvature_Dprime == R(0));
  CHECK(r.descartes_residual_D.is_zero());
  CHECK(r.descartes_residual_Dprime.is_zero());

  const auto roots = fourth_curvatures(R(1), R(1), R(0));
  CHECK(*roots.larger_exact == r.curvature_D);
  CHECK(*roots.smaller_exact == r.curvature_Dprime);
}

TEST_CASE("parallel spinors are degenerate") {
  try {
    build_tessellation(sp(1, 0), sp(2, 0));
    FAIL("expected DegenerateInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("tile_area_shoelace") {
  const auto t = build_tessellation(sp(3, 0), sp(-1, 2));
  CHECK(tile_area_shoelace(t.square(0)) == R(9));
  const Tile flat{TileClass::Green, sp(0, 0), sp(2, 1), sp(2, 1), R(0), "flat"};
  CHECK(tile_area_shoelace(flat) == R(0));
  const Tile red{TileClass::RedCentral, sp(0, 0), sp(0, 3), sp(-1, 2), cross(sp(0, 3), sp(-1, 2)), "red"};
  CHECK(tile_area_shoelace(red) == R(3));
}

TEST_CASE("tile_area_pick") {
  const Tile unit{TileClass::YellowSquare, sp(0, 0), sp(1, 0), sp(0, 1), R(1), "unit"};
  CHECK(tile_area_pick(unit) == R(1));
  const auto t = build_tessellation(sp(3, 0), sp(-1, 2));
  const auto counted = count_by_ray_casting(t.square(0));
  CHECK(counted.interior == 4);
  CHECK(counted.boundary == 12);
  CHECK(tile_area_pick(t.square(0)) == R(9));

  const Tile half{TileClass::Green, {Rational::parse("1/2"), R(0)}, sp(1, 0), sp(0, 1), R(1), "half"};
  try {
    tile_area_pick(half);
    FAIL("expected NonIntegralVertices");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralVertices);
  }
  const Tile cw{TileClass::Green, sp(0, 0), sp(0, 1), sp(1, 0), R(-1), "cw"};
  try {
    tile_area_pick(cw);
    FAIL("expected NegativeOrientation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeOrientation);
  }
}

TEST_CASE("butterflies") {
  auto t = build_tessellation(sp(3, 0), sp(-1, 2));
  CHECK(butterfly_areas(t) == std::array<Rational, 3>{R(23), R(23), R(23)});
  // Components per butterfly: square + aligned red + two greens.
  CHECK(t.square(0).signed_area == R(9));
  CHECK(t.aligned_red(0).signed_area == R(2));
  CHECK(t.square(1).signed_area == R(5));
  CHECK(t.aligned_red(1).signed_area == R(6));
  CHECK(t.square(2).signed_area == R(8));
  CHECK(t.aligned_red(2).signed_area == R(3));

  t = build_tessellation(sp(1, 0), sp(0, 1));
  CHECK(butterfly_areas(t) == std::array<Rational, 3>{R(4), R(4), R(4)});
}

TEST_CASE("aligned red touches its square only at the origin; greens share an edge") {
  const auto t = build_tessellation(sp(5, 1), sp(-2, 3));
  for (int k = 0; k < 3; ++k) {
    const auto sq = t.square(k).vertices();
    auto shared = [&](const Tile& other) {
      int n = 0;
      for (const auto& v : other.vertices()) n += static_cast<int>(std::count(sq.begin(), sq.end(), v));
      return n;
    };
    CHECK(shared(t.aligned_red(k)) == 1);
    for (const Tile* g : t.greens_of_square(k)) CHECK(shared(*g) == 2);
  }
}

TEST_CASE("observations") {
  for (const auto& [a, b, constant] : {std::tuple{sp(3, 0), sp(-1, 2), R(11)}, std::tuple{sp(1, 0), sp(0, 1), R(2)}}) {
    const auto obs = check_observations(build_tessellation(a, b));
    REQUIRE(obs.size() == 5);
    for (const auto& o : obs) CHECK_MESSAGE(o.passed, o.name << ": " << o.witness);
    CHECK(obs[4].witness == constant.to_string());
  }
  const auto t = build_tessellation(sp(5, 1), sp(-2, 3));
  for (const auto& o : check_observations(t)) CHECK_MESSAGE(o.passed, o.name);
  for (const auto& tile : t.tiles) CHECK(tile_area_shoelace(tile) == tile.signed_area);
}

TEST_CASE("overlap flag on a tessellation with negative tiles") {
  // a.b > 0 makes the red tile (a*, b) negative.
  const auto t = build_tessellation(sp(2, 0), sp(1, 1));
  CHECK(t.has_overlap());
  const auto r = summarize(t);
  CHECK(r.has_overlap);
  CHECK(r.descartes_residual_D.is_zero());
  CHECK(r.descartes_residual_Dprime.is_zero());
}

TEST_CASE("JSON document") {
  const auto j = to_json(build_tessellation(sp(3, 0), sp(-1, 2)));
  CHECK(j["a"] == "3,0");
  CHECK(j["c"] == "-2,-2");
  REQUIRE(j["tiles"].size() == 15);
  CHECK(j["tiles"][0]["label"] == "sq_a");
  CHECK(j["tiles"][0]["class"] == "yellow_square");
  CHECK(j["tiles"][0]["vertices"][2] == nlohmann::json::array({"3", "3"}));
  CHECK(j["tiles"][0]["area"] == "9");
  CHECK(j["report"]["curvature_D"] == "23");
  CHECK(j["report"]["midcircles_with_Dprime"] == nlohmann::json::array({"2", "3", "-1"}));
}

TEST_CASE("property: tessellation identities on random integer spinors") {
  testing::Gen gen(0x5EED0003);
  int positive_cases = 0;
  for (int i = 0; i < 3000; ++i) {
    const Spinor a = gen.integer_spinor(12);
    const Spinor b = gen.integer_spinor(12);
    if (cross(a, b).is_zero()) continue;
    const auto t = build_tessellation(a, b);
    const Spinor& c = t.c;
    const auto r = summarize(t);

    // Greens carry the six equal cross products.
    const Rational g = cross(a, b);
    for (const Rational& x : {cross(b, c), cross(c, a), cross(star(a), star(b)), cross(star(b), star(c)),
                              cross(star(c), star(a))}) {
      REQUIRE(x == g);
    }
    REQUIRE(class_areas(t, TileClass::Green) == std::vector<Rational>(6, g));
    REQUIRE(r.curvature_D - r.curvature_Dprime == Rational(4) * g);
    REQUIRE(r.curvature_D + r.curvature_Dprime == norm_sq(a) + norm_sq(b) + norm_sq(c));
    REQUIRE(r.descartes_residual_D.is_zero());
    REQUIRE(r.descartes_residual_Dprime.is_zero());
    const auto bf = butterfly_areas(t);
    REQUIRE(bf[0] == r.curvature_D);
    REQUIRE(bf[1] == r.curvature_D);
    REQUIRE(bf[2] == r.curvature_D);
    for (const auto& o : check_observations(t)) REQUIRE_MESSAGE(o.passed, o.name);

    for (const auto& tile : t.tiles) {
      REQUIRE(tile_area_shoelace(tile) == tile.signed_area);
      if (tile.signed_area.sign() > 0) REQUIRE(tile_area_pick(tile) == tile.signed_area);
    }

    // Swapping a and b keeps every colour class except the greens, which flip sign.
    const auto s = build_tessellation(b, a);
    for (auto cls : {TileClass::YellowSquare, TileClass::RedCentral, TileClass::LightRed}) {
      REQUIRE(class_areas(s, cls) == class_areas(t, cls));
    }
    REQUIRE(class_areas(s, TileClass::Green, true) == class_areas(t, TileClass::Green, true));

    if (!r.has_overlap) {
      ++positive_cases;
      const auto hull = outer_boundary(t);
      REQUIRE(hull.size() <= 12);
      REQUIRE(polygon_area(hull) == total_signed_area(t));
    }
  }
  CHECK(positive_cases > 100);
}

TEST_CASE("outer boundary of the worked example is a 12-gon") {
  const auto t = build_tessellation(sp(3, 0), sp(-1, 2));
  const auto hull = outer_boundary(t);
  CHECK(hull.size() == 12);
  CHECK(polygon_area(hull) == total_signed_area(t));
  CHECK(total_signed_area(t) == R(80));
}
