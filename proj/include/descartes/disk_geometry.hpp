#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "descartes/rational.hpp"
#include "descartes/spinor.hpp"

namespace descartes {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kPlacementTolerance = 1e-12;

/// Exact disk label (x_dot, y_dot) / beta: center (x_dot/beta, y_dot/beta),
/// radius 1/beta. Negative beta is the unbounded disk outside a circle.
struct Symbol {
  Rational x_dot;
  Rational y_dot;
  Rational beta;

  /// Throws Error{ZeroCurvature} when curvature == 0.
  static Symbol from_disk(const Rational& center_x, const Rational& center_y, const Rational& curvature);
  Rational center_x() const { return x_dot / beta; }
  Rational center_y() const { return y_dot / beta; }
  Rational radius() const { return Rational(1) / beta; }
};

/// Triangle of two tangent disks: (b1 x2' - b2 x1', b1 y2' - b2 y1', b1 + b2).
/// Requires exact tangency |c1 - c2|^2 == (r1 + r2)^2, else Error{NotTangent}.
PythTriple symbol_join(const Symbol& s1, const Symbol& s2);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct PlacedDisk {
  Point center;
  double radius = 0.0;  // signed; negative for an unbounded disk
  double curvature = 0.0;
  std::string label;

  static PlacedDisk from_curvature(Point center, double curvature, std::string label = {});
};

struct TangencySpinorNumeric {
  Point u;
  std::string from;
  std::string to;
};

/// Principal root of z / (r1 r2), z = c2 - c1: Re(u) > 0, or Re(u) == 0 and Im(u) >= 0.
/// Throws Error{ZeroRadius} or Error{NotTangent}.
TangencySpinorNumeric tangency_spinor(const PlacedDisk& d1, const PlacedDisk& d2, double tol = kDefaultTolerance);

/// A at the origin, B on the positive x axis, C above. Throws Error{NonPositiveCurvature}.
std::array<PlacedDisk, 3> place_configuration(const Rational& a, const Rational& b, const Rational& c);

/// Disk of curvature `d` tangent to all three placed disks. Throws
/// Error{ZeroCurvature} or Error{NoConsistentPlacement}.
PlacedDisk realize_fourth(const std::array<PlacedDisk, 3>& placed, const Rational& d, double tol = kDefaultTolerance);

/// Circumcircle of the three pairwise tangency points. Throws
/// Error{CollinearTangencyPoints} (the "circle" is a line, curvature 0) or Error{NotTangent}.
PlacedDisk midcircle_through_tangencies(const PlacedDisk& d1, const PlacedDisk& d2, const PlacedDisk& d3,
                                        double tol = kDefaultTolerance);

/// Mid-circles of (ABC), (ABD), (BCD), (CAD); collinear cases are skipped.
std::vector<PlacedDisk> all_midcircles(const std::array<PlacedDisk, 4>& disks, double tol = kDefaultTolerance);

struct ConfigurationReport {
  std::array<PlacedDisk, 4> disks;
  std::vector<TangencySpinorNumeric> spinors;     // the six pairs (i < j)
  std::map<std::string, double> law_residuals;    // prop1, thm2, thm3, thm4_curl, thm5a_div, thm5b_add
  std::map<std::string, std::vector<int>> sign_assignment;
  double tolerance = kDefaultTolerance;

  bool passed() const;
};

/// Extracts all tangency spinors and evaluates every spinor law with explicit
/// sign searches. Residuals are absolute for magnitudes up to 1 and relative above.
ConfigurationReport verify_spinor_laws(const std::array<PlacedDisk, 4>& disks, double tol = kDefaultTolerance);

/// place_configuration + realize_fourth for a quadruple whose first three
/// entries are positive.
std::array<PlacedDisk, 4> realize_quadruple(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d, double tol = kDefaultTolerance);

nlohmann::json to_json(const PlacedDisk& disk);
nlohmann::json to_json(const ConfigurationReport& report);
PlacedDisk placed_disk_from_json(const nlohmann::json& j);

}  // namespace descartes
