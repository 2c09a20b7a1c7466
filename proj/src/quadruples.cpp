#include "descartes/quadruples.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "descartes/error.hpp"

namespace descartes {

std::string DescartesQuadruple::to_string() const {
  return A.to_string() + "," + B.to_string() + "," + C.to_string() + "," + D.to_string();
}

Rational descartes_residual(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Rational sum = a + b + c + d;
  return Rational(2) * (a * a + b * b + c * c + d * d) - sum * sum;
}

Rational descartes_residual(const DescartesQuadruple& q) { return descartes_residual(q.A, q.B, q.C, q.D); }

DescartesQuadruple apollonian_move(const DescartesQuadruple& q, int index) {
  auto e = q.entries();
  const Rational others = e[0] + e[1] + e[2] + e[3] - e[index];
  e[index] = Rational(2) * others - e[index];
  return {e[0], e[1], e[2], e[3]};
}

FourthCurvatures fourth_curvatures(const Rational& a, const Rational& b, const Rational& c) {
  const Rational disc = a * b + b * c + c * a;
  if (disc.sign() < 0) {
    throw Error(ErrorKind::ComplexSolutions, "AB+BC+CA = " + disc.to_string() + " < 0");
  }
  const Rational sum = a + b + c;
  FourthCurvatures out;
  if (auto root = exact_sqrt(disc)) {
    out.exact = true;
    out.larger_exact = sum + Rational(2) * *root;
    out.smaller_exact = sum - Rational(2) * *root;
    out.larger = out.larger_exact->to_double();
    out.smaller = out.smaller_exact->to_double();
  } else {
    const double s = sum.to_double();
    const double r = 2.0 * std::sqrt(disc.to_double());
    out.larger = s + r;
    out.smaller = s - r;
  }
  return out;
}

QuadrupleFamily from_spinor_pair(const Spinor& a, const Spinor& b) {
  const Rational aa = norm_sq(a);
  const Rational bb = norm_sq(b);
  const Rational ab = dot(a, b);
  const Rational twice_cross = Rational(2) * cross(a, b);
  const Rational A = bb + ab;
  const Rational B = aa + ab;
  const Rational C = -ab;
  const Rational mid = aa + bb + ab;
  Rational d1 = mid + twice_cross;
  Rational d2 = mid - twice_cross;
  if (d1 < d2) std::swap(d1, d2);
  assert(d1 * d2 == mid * mid - twice_cross * twice_cross);
  return {{A, B, C, d1}, {A, B, C, d2}, a, b};
}

TripleCurvatures from_spinor_triple(const Spinor& a, const Spinor& b, const Spinor& c) {
  if (!(a + b + c).is_zero()) {
    throw Error(ErrorKind::CurlViolation, "a+b+c = (" + (a + b + c).to_string() + ")");
  }
  const Rational g = cross(a, b);
  assert(g == cross(b, c) && g == cross(c, a));
  const Rational half_sum = (norm_sq(a) + norm_sq(b) + norm_sq(c)) / Rational(2);
  return {-dot(b, c), -dot(c, a), -dot(a, b), half_sum + Rational(2) * g, half_sum - Rational(2) * g};
}

std::string CanonicalQuadruple::key() const {
  return primitive[0].to_string() + "," + primitive[1].to_string() + "," + primitive[2].to_string() + "," +
         primitive[3].to_string();
}

CanonicalQuadruple canonicalize(const DescartesQuadruple& q) {
  CanonicalQuadruple out;
  out.sorted = q.entries();
  mpz_class g = 0;
  for (const auto& e : out.sorted) {
    if (!e.is_integer()) throw Error(ErrorKind::NonIntegral, e.to_string() + " in (" + q.to_string() + ")");
    g = gcd(g, e.numerator());
  }
  std::sort(out.sorted.begin(), out.sorted.end());
  out.is_primitive = (g == 1);
  out.primitive = out.sorted;
  if (g > 1) {
    for (auto& e : out.primitive) e = e / Rational(g);
  }
  return out;
}

nlohmann::json to_json(const QuadrupleFamily& family) {
  return {
      {"a", family.generator_a.to_string()},
      {"b", family.generator_b.to_string()},
      {"A", family.quadruple_1.A.to_string()},
      {"B", family.quadruple_1.B.to_string()},
      {"C", family.quadruple_1.C.to_string()},
      {"D1", family.D1().to_string()},
      {"D2", family.D2().to_string()},
  };
}

}  // namespace descartes
