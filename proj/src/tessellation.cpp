#include "descartes/tessellation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "descartes/error.hpp"
#include "descartes/quadruples.hpp"

namespace descartes {

namespace {

constexpr std::size_t kFirstRed = 3;
constexpr std::size_t kFirstGreen = 6;
constexpr std::size_t kFirstLightRed = 12;

// Central red index (relative to kFirstRed) touching square k only at the origin.
constexpr std::array<std::size_t, 3> kAlignedRed = {1, 2, 0};

Tile make_tile(TileClass cls, const Spinor& anchor, const Spinor& e1, const Spinor& e2, std::string label) {
  return {cls, anchor, e1, e2, cross(e1, e2), std::move(label)};
}

std::array<Rational, 3> areas_of(const Tessellation& t, std::size_t first) {
  return {t.tiles[first].signed_area, t.tiles[first + 1].signed_area, t.tiles[first + 2].signed_area};
}

std::array<std::int64_t, 2> lattice_point(const Spinor& v) {
  if (!v.x.is_integer() || !v.y.is_integer() || !v.x.numerator().fits_slong_p() ||
      !v.y.numerator().fits_slong_p()) {
    throw Error(ErrorKind::NonIntegralVertices, "vertex (" + v.to_string() + ")");
  }
  return {v.x.to_int64(), v.y.to_int64()};
}

}  // namespace

std::string_view tile_class_name(TileClass cls) noexcept {
  switch (cls) {
    case TileClass::YellowSquare: return "yellow_square";
    case TileClass::RedCentral: return "red_central";
    case TileClass::Green: return "green";
    case TileClass::LightRed: return "light_red";
  }
  return "unknown";
}

std::array<Spinor, 4> Tile::vertices() const {
  return {anchor, anchor + edge1, anchor + edge1 + edge2, anchor + edge2};
}

const Tile& Tessellation::aligned_red(int k) const {
  return tiles[kFirstRed + kAlignedRed[static_cast<std::size_t>(k)]];
}

std::array<const Tile*, 2> Tessellation::greens_of_square(int k) const {
  const std::size_t first = kFirstGreen + 2 * static_cast<std::size_t>(k);
  return {&tiles[first], &tiles[first + 1]};
}

bool Tessellation::has_overlap() const {
  return std::any_of(tiles.begin(), tiles.end(), [](const Tile& t) { return t.signed_area.sign() < 0; });
}

Tessellation build_tessellation(const Spinor& a, const Spinor& b) {
  if (cross(a, b).is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "spinors (" + a.to_string() + ") and (" + b.to_string() + ") are parallel");
  }
  const Spinor c = -a - b;
  const Spinor as = star(a);
  const Spinor bs = star(b);
  const Spinor cs = star(c);
  const Spinor origin{};

  Tessellation t{a, b, c, {}};
  t.tiles.reserve(15);
  t.tiles.push_back(make_tile(TileClass::YellowSquare, origin, a, as, "sq_a"));
  t.tiles.push_back(make_tile(TileClass::YellowSquare, origin, b, bs, "sq_b"));
  t.tiles.push_back(make_tile(TileClass::YellowSquare, origin, c, cs, "sq_c"));

  t.tiles.push_back(make_tile(TileClass::RedCentral, origin, as, b, "red_a*b"));
  t.tiles.push_back(make_tile(TileClass::RedCentral, origin, bs, c, "red_b*c"));
  t.tiles.push_back(make_tile(TileClass::RedCentral, origin, cs, a, "red_c*a"));

  // Greens carry a x b = b x c = c x a = a* x b* = b* x c* = c* x a*.
  t.tiles.push_back(make_tile(TileClass::Green, as, a, b, "green_axb"));
  t.tiles.push_back(make_tile(TileClass::Green, a, cs, as, "green_c*xa*"));
  t.tiles.push_back(make_tile(TileClass::Green, bs, b, c, "green_bxc"));
  t.tiles.push_back(make_tile(TileClass::Green, b, as, bs, "green_a*xb*"));
  t.tiles.push_back(make_tile(TileClass::Green, cs, c, a, "green_cxa"));
  t.tiles.push_back(make_tile(TileClass::Green, c, bs, cs, "green_b*xc*"));

  t.tiles.push_back(make_tile(TileClass::LightRed, a + as, cs, b, "lred_c*b"));
  t.tiles.push_back(make_tile(TileClass::LightRed, b + bs, as, c, "lred_a*c"));
  t.tiles.push_back(make_tile(TileClass::LightRed, c + cs, bs, a, "lred_b*a"));
  return t;
}

Rational polygon_area(const std::vector<Spinor>& polygon) {
  Rational twice;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Spinor& p = polygon[i];
    const Spinor& q = polygon[(i + 1) % polygon.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rational(2);
}

Rational tile_area_shoelace(const Tile& t) {
  const auto v = t.vertices();
  return polygon_area({v.begin(), v.end()});
}

Rational tile_area_pick(const Tile& t) {
  std::array<std::array<std::int64_t, 2>, 4> pts{};
  const auto verts = t.vertices();
  for (std::size_t i = 0; i < 4; ++i) pts[i] = lattice_point(verts[i]);
  if (t.signed_area.sign() <= 0) {
    throw Error(ErrorKind::NegativeOrientation, "tile " + t.label + " has area " + t.signed_area.to_string());
  }

  std::int64_t xmin = pts[0][0], xmax = pts[0][0], ymin = pts[0][1], ymax = pts[0][1];
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }

  // Positive orientation means counter-clockwise: interior points are strictly
  // left of every edge.
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  for (std::int64_t x = xmin; x <= xmax; ++x) {
    for (std::int64_t y = ymin; y <= ymax; ++y) {
      bool inside = true;
      bool on_edge = false;
      for (std::size_t i = 0; i < 4; ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % 4];
        const std::int64_t side = (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]);
        if (side < 0) {
          inside = false;
          break;
        }
        if (side == 0 && std::min(p[0], q[0]) <= x && x <= std::max(p[0], q[0]) &&
            std::min(p[1], q[1]) <= y && y <= std::max(p[1], q[1])) {
          on_edge = true;
        }
      }
      if (!inside) continue;
      if (on_edge) {
        ++boundary;
      } else {
        ++interior;
      }
    }
  }
  return Rational(static_cast<long>(interior)) + Rational(static_cast<long>(boundary)) / Rational(2) - Rational(1);
}

TessellationReport summarize(const Tessellation& t) {
  TessellationReport r;
  r.square_areas = areas_of(t, 0);
  // Red tiles are stored as (a*,b)=C, (b*,c)=A, (c*,a)=B.
  const auto reds = areas_of(t, kFirstRed);
  r.red_areas = {reds[1], reds[2], reds[0]};
  r.green_area = t.tiles[kFirstGreen].signed_area;
  r.light_red_areas = areas_of(t, kFirstLightRed);

  const Rational& A = r.red_areas[0];
  const Rational& B = r.red_areas[1];
  const Rational& C = r.red_areas[2];
  const Rational& G = r.green_area;
  const Rational two_green = Rational(2) * G;
  r.curvature_D = A + B + C + two_green;
  r.curvature_Dprime = A + B + C - two_green;
  r.midcircle_ABC = G;

  // Square on c has area A+B, on a has B+C, on b has C+A.
  const auto& sq = r.square_areas;
  r.midcircles_with_D = {sq[2] + G, sq[0] + G, sq[1] + G};
  r.midcircles_with_Dprime = {sq[2] - G, sq[0] - G, sq[1] - G};

  r.descartes_residual_D = descartes_residual(A, B, C, r.curvature_D);
  r.descartes_residual_Dprime = descartes_residual(A, B, C, r.curvature_Dprime);
  r.square_plus_aligned_red = t.square(0).signed_area + t.aligned_red(0).signed_area;
  r.has_overlap = t.has_overlap();
  return r;
}

std::array<Rational, 3> butterfly_areas(const Tessellation& t) {
  std::array<Rational, 3> out;
  for (int k = 0; k < 3; ++k) {
    const auto greens = t.greens_of_square(k);
    out[static_cast<std::size_t>(k)] =
        t.square(k).signed_area + t.aligned_red(k).signed_area + greens[0]->signed_area + greens[1]->signed_area;
  }
  return out;
}

bool congruent(const Tile& s, const Tile& t) {
  const Rational s1 = norm_sq(s.edge1), s2 = norm_sq(s.edge2);
  const Rational t1 = norm_sq(t.edge1), t2 = norm_sq(t.edge2);
  const bool same_sides = (s1 == t1 && s2 == t2) || (s1 == t2 && s2 == t1);
  return same_sides && abs(dot(s.edge1, s.edge2)) == abs(dot(t.edge1, t.edge2));
}

namespace {

// Pairs tiles of `group` with tiles of `partners` (or among themselves when
// partners is empty) under congruence; returns the matching or an empty vector.
std::vector<std::pair<const Tile*, const Tile*>> match_congruent(std::vector<const Tile*> group,
                                                                  std::vector<const Tile*> partners) {
  std::vector<std::pair<const Tile*, const Tile*>> pairs;
  const bool self = partners.empty();
  if (self) {
    while (!group.empty()) {
      const Tile* first = group.front();
      group.erase(group.begin());
      auto it = std::find_if(group.begin(), group.end(), [&](const Tile* o) { return congruent(*first, *o); });
      if (it == group.end()) return {};
      pairs.emplace_back(first, *it);
      group.erase(it);
    }
    return pairs;
  }
  for (const Tile* g : group) {
    auto it = std::find_if(partners.begin(), partners.end(), [&](const Tile* o) { return congruent(*g, *o); });
    if (it == partners.end()) return {};
    pairs.emplace_back(g, *it);
    partners.erase(it);
  }
  return pairs;
}

std::string describe_pairs(const std::vector<std::pair<const Tile*, const Tile*>>& pairs) {
  std::string out;
  for (const auto& [p, q] : pairs) {
    if (!out.empty()) out += "; ";
    out += p->label + "~" + q->label;
  }
  return out;
}

std::vector<const Tile*> tiles_of(const Tessellation& t, TileClass cls) {
  std::vector<const Tile*> out;
  for (const auto& tile : t.tiles) {
    if (tile.cls == cls) out.push_back(&tile);
  }
  return out;
}

}  // namespace

std::vector<ObservationResult> check_observations(const Tessellation& t) {
  std::vector<ObservationResult> out;
  const auto greens = tiles_of(t, TileClass::Green);
  const auto reds = tiles_of(t, TileClass::RedCentral);
  const auto light = tiles_of(t, TileClass::LightRed);

  {
    const Rational& g = greens.front()->signed_area;
    const bool ok = std::all_of(greens.begin(), greens.end(), [&](const Tile* x) { return x->signed_area == g; });
    out.push_back({"greens_equal_area", ok, "G=" + g.to_string()});
  }
  {
    const auto pairs = match_congruent(greens, {});
    out.push_back({"greens_congruent_pairs", pairs.size() == 3, describe_pairs(pairs)});
  }
  {
    const auto pairs = match_congruent(light, reds);
    out.push_back({"light_reds_congruent_to_reds", pairs.size() == 3, describe_pairs(pairs)});
  }
  {
    // Square on a is bordered by reds (a*,b) and (c*,a); cyclically for b, c.
    bool ok = true;
    std::ostringstream witness;
    for (int k = 0; k < 3; ++k) {
      const Rational& sq = t.square(k).signed_area;
      const Rational adjacent = t.tiles[kFirstRed + static_cast<std::size_t>(k)].signed_area +
                                t.tiles[kFirstRed + (static_cast<std::size_t>(k) + 2) % 3].signed_area;
      ok = ok && sq == adjacent;
      witness << (k ? "; " : "") << sq << "=" << adjacent;
    }
    out.push_back({"square_equals_adjacent_reds", ok, witness.str()});
  }
  {
    const auto r = summarize(t);
    const Rational abc = r.red_areas[0] + r.red_areas[1] + r.red_areas[2];
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      ok = ok && t.square(k).signed_area + t.aligned_red(k).signed_area == abc;
    }
    out.push_back({"square_plus_vertex_red_constant", ok, abc.to_string()});
  }
  return out;
}

std::vector<Spinor> outer_boundary(const Tessellation& t) {
  std::vector<Spinor> pts;
  for (const auto& tile : t.tiles) {
    for (const auto& v : tile.vertices()) pts.push_back(v);
  }
  std::sort(pts.begin(), pts.end(), [](const Spinor& p, const Spinor& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  // Andrew's monotone chain.
  auto turn = [](const Spinor& o, const Spinor& p, const Spinor& q) { return cross(p - o, q - o); };
  std::vector<Spinor> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational total_signed_area(const Tessellation& t) {
  return std::accumulate(t.tiles.begin(), t.tiles.end(), Rational(),
                         [](Rational acc, const Tile& tile) { return acc + tile.signed_area; });
}

nlohmann::json to_json(const TessellationReport& r) {
  auto three = [](const std::array<Rational, 3>& v) {
    return nlohmann::json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()});
  };
  return {
      {"square_areas", three(r.square_areas)},
      {"red_areas", three(r.red_areas)},
      {"green_area", r.green_area.to_string()},
      {"light_red_areas", three(r.light_red_areas)},
      {"curvature_D", r.curvature_D.to_string()},
      {"curvature_Dprime", r.curvature_Dprime.to_string()},
      {"midcircle_ABC", r.midcircle_ABC.to_string()},
      {"midcircles_with_D", three(r.midcircles_with_D)},
      {"midcircles_with_Dprime", three(r.midcircles_with_Dprime)},
      {"descartes_residual_D", r.descartes_residual_D.to_string()},
      {"descartes_residual_Dprime", r.descartes_residual_Dprime.to_string()},
      {"square_plus_aligned_red", r.square_plus_aligned_red.to_string()},
      {"has_overlap", r.has_overlap},
  };
}

nlohmann::json to_json(const Tessellation& t) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& tile : t.tiles) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : tile.vertices()) verts.push_back({v.x.to_string(), v.y.to_string()});
    tiles.push_back({
        {"label", tile.label},
        {"class", std::string(tile_class_name(tile.cls))},
        {"vertices", std::move(verts)},
        {"area", tile.signed_area.to_string()},
    });
  }
  return {
      {"a", t.a.to_string()},
      {"b", t.b.to_string()},
      {"c", t.c.to_string()},
      {"tiles", std::move(tiles)},
      {"report", to_json(summarize(t))},
  };
}

}  // namespace descartes
