#include "descartes/spinor.hpp"

#include "descartes/error.hpp"

namespace descartes {

Spinor Spinor::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected 'x,y', got '" + std::string(text) + "'");
  }
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

std::string Spinor::to_string() const { return x.to_string() + "," + y.to_string(); }

Rational dot(const Spinor& u, const Spinor& v) { return u.x * v.x + u.y * v.y; }

Rational cross(const Spinor& u, const Spinor& v) { return u.x * v.y - v.x * u.y; }

Spinor star(const Spinor& u) { return {-u.y, u.x}; }

Rational norm_sq(const Spinor& u) { return dot(u, u); }

PythTriple euclid_square(const Spinor& u) {
  const Spinor sq = complex_mul(u, u);
  return {sq.x, sq.y, norm_sq(u)};
}

Spinor complex_mul(const Spinor& u, const Spinor& v) {
  return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x};
}

Spinor complex_conj(const Spinor& u) { return {u.x, -u.y}; }

}  // namespace descartes
