#pragma once

#include <string>
#include <string_view>

#include "descartes/rational.hpp"

namespace descartes {

/// A vector of the spinor space, equivalently the complex number x + iy.
struct Spinor {
  Rational x;
  Rational y;

  /// Parses "x,y" where each component is an integer or "p/q". Throws Error{ParseError}.
  static Spinor parse(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  Spinor operator-() const { return {-x, -y}; }
  friend Spinor operator+(const Spinor& u, const Spinor& v) { return {u.x + v.x, u.y + v.y}; }
  friend Spinor operator-(const Spinor& u, const Spinor& v) { return {u.x - v.x, u.y - v.y}; }
  friend Spinor operator*(const Rational& k, const Spinor& u) { return {k * u.x, k * u.y}; }
  friend bool operator==(const Spinor&, const Spinor&) = default;
};

/// Pythagorean triple (a, b, c) with a^2 + b^2 = c^2 and c >= 0.
struct PythTriple {
  Rational a;
  Rational b;
  Rational c;

  bool satisfies_pythagoras() const { return a * a + b * b == c * c && c.sign() >= 0; }
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

/// Inner product x x' + y y'.
Rational dot(const Spinor& u, const Spinor& v);
/// Symplectic product x y' - x' y, i.e. the signed parallelogram area on (u, v).
Rational cross(const Spinor& u, const Spinor& v);
/// Quarter turn (x, y) -> (-y, x); multiplication by i.
Spinor star(const Spinor& u);
Rational norm_sq(const Spinor& u);

/// Euclidean-parameter map (m, n) -> (m^2 - n^2, 2mn, m^2 + n^2): the complex
/// square u^2 with its modulus as third entry.
PythTriple euclid_square(const Spinor& u);

// Complex view of the same pair.
Spinor complex_mul(const Spinor& u, const Spinor& v);
Spinor complex_conj(const Spinor& u);

}  // namespace descartes
