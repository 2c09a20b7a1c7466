#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "descartes/rational.hpp"
#include "descartes/spinor.hpp"

namespace descartes {

enum class TileClass { YellowSquare, RedCentral, Green, LightRed };

std::string_view tile_class_name(TileClass cls) noexcept;

/// Parallelogram anchor -> anchor+edge1 -> anchor+edge1+edge2 -> anchor+edge2.
struct Tile {
  TileClass cls;
  Spinor anchor;
  Spinor edge1;
  Spinor edge2;
  Rational signed_area;  // cross(edge1, edge2)
  std::string label;

  std::array<Spinor, 4> vertices() const;
};

/// The 15-tile dodecagon built on three spinors with a + b + c = 0.
///
/// Tile order is fixed:
///   [0..2]   yellow squares on a, b, c
///   [3..5]   central reds (a*, b), (b*, c), (c*, a)   -> curvatures C, A, B
///   [6..11]  greens, two per square: (a*; a, b), (a; c*, a*), (b*; b, c),
///            (b; a*, b*), (c*; c, a), (c; b*, c*)
///   [12..14] light reds (a+a*; c*, b), (b+b*; a*, c), (c+c*; b*, a)
///            -> curvatures A, B, C
struct Tessellation {
  Spinor a;
  Spinor b;
  Spinor c;
  std::vector<Tile> tiles;

  const Tile& square(int k) const { return tiles[static_cast<std::size_t>(k)]; }
  /// Central red tile sharing exactly one vertex (the origin) with square k.
  const Tile& aligned_red(int k) const;
  /// The two greens sharing an edge with square k.
  std::array<const Tile*, 2> greens_of_square(int k) const;

  /// Some tile has negative signed area, i.e. tiles overlap in the plane.
  bool has_overlap() const;
};

/// Throws Error{DegenerateInput} when cross(a, b) == 0.
Tessellation build_tessellation(const Spinor& a, const Spinor& b);

Rational tile_area_shoelace(const Tile& t);

/// I + B/2 - 1 with lattice points counted directly. Throws
/// Error{NonIntegralVertices} or Error{NegativeOrientation}.
Rational tile_area_pick(const Tile& t);

struct TessellationReport {
  std::array<Rational, 3> square_areas;     // |a|^2, |b|^2, |c|^2
  std::array<Rational, 3> red_areas;        // A, B, C
  Rational green_area;                      // G
  std::array<Rational, 3> light_red_areas;  // A, B, C
  Rational curvature_D;
  Rational curvature_Dprime;
  Rational midcircle_ABC;
  std::array<Rational, 3> midcircles_with_D;       // (ABD), (BCD), (CAD)
  std::array<Rational, 3> midcircles_with_Dprime;  // (ABD'), (BCD'), (CAD')
  Rational descartes_residual_D;
  Rational descartes_residual_Dprime;
  Rational square_plus_aligned_red;  // common value of square + vertex-touching red
  bool has_overlap = false;
};

TessellationReport summarize(const Tessellation& t);

/// Square + aligned red + its two greens, for each of the three squares.
std::array<Rational, 3> butterfly_areas(const Tessellation& t);

struct ObservationResult {
  std::string name;
  bool passed = false;
  std::string witness;
};

std::vector<ObservationResult> check_observations(const Tessellation& t);

/// Signed-area congruence test for parallelograms: same side lengths and the
/// same unsigned angle between sides.
bool congruent(const Tile& s, const Tile& t);

/// Convex outline of all tile vertices, counter-clockwise, collinear points dropped.
std::vector<Spinor> outer_boundary(const Tessellation& t);
Rational polygon_area(const std::vector<Spinor>& polygon);
Rational total_signed_area(const Tessellation& t);

nlohmann::json to_json(const Tessellation& t);
nlohmann::json to_json(const TessellationReport& r);

}  // namespace descartes
