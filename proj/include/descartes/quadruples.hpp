#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "descartes/rational.hpp"
#include "descartes/spinor.hpp"

namespace descartes {

/// Four curvatures, candidates for 2(A^2+B^2+C^2+D^2) = (A+B+C+D)^2.
struct DescartesQuadruple {
  Rational A;
  Rational B;
  Rational C;
  Rational D;

  std::array<Rational, 4> entries() const { return {A, B, C, D}; }
  /// "A,B,C,D"
  std::string to_string() const;
  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;
};

/// 2(A^2+B^2+C^2+D^2) - (A+B+C+D)^2; zero iff the quadruple is Descartes.
Rational descartes_residual(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Rational descartes_residual(const DescartesQuadruple& q);

/// Replace entry `index` by the other root of the quadratic in that entry.
DescartesQuadruple apollonian_move(const DescartesQuadruple& q, int index);

struct FourthCurvatures {
  bool exact = false;
  std::optional<Rational> larger_exact;
  std::optional<Rational> smaller_exact;
  double larger = 0.0;
  double smaller = 0.0;
};

/// Both roots A+B+C +- 2 sqrt(AB+BC+CA), larger first. Exact when the square
/// root is rational, otherwise a double pair. Throws Error{ComplexSolutions}.
FourthCurvatures fourth_curvatures(const Rational& a, const Rational& b, const Rational& c);

struct QuadrupleFamily {
  DescartesQuadruple quadruple_1;  // with the larger fourth curvature
  DescartesQuadruple quadruple_2;
  Spinor generator_a;
  Spinor generator_b;

  const Rational& D1() const { return quadruple_1.D; }
  const Rational& D2() const { return quadruple_2.D; }
};

/// Integral parametrization from two free spinors:
///   A = |b|^2 + a.b, B = |a|^2 + a.b, C = -a.b, D = |a|^2 + |b|^2 + a.b +- 2 a x b.
QuadrupleFamily from_spinor_pair(const Spinor& a, const Spinor& b);

struct TripleCurvatures {
  Rational A;
  Rational B;
  Rational C;
  Rational D1;  // D1 - D2 = 4 a x b, signed
  Rational D2;
};

/// Curvatures from three spinors with vanishing sum. Throws Error{CurlViolation}.
TripleCurvatures from_spinor_triple(const Spinor& a, const Spinor& b, const Spinor& c);

struct CanonicalQuadruple {
  std::array<Rational, 4> sorted;     // ascending
  std::array<Rational, 4> primitive;  // sorted divided by the gcd
  bool is_primitive = false;

  /// "a,b,c,d" of the primitive form
  std::string key() const;
};

/// Throws Error{NonIntegral} if any entry is not an integer.
CanonicalQuadruple canonicalize(const DescartesQuadruple& q);

nlohmann::json to_json(const QuadrupleFamily& family);

}  // namespace descartes
