#include "descartes/rational.hpp"

#include <cctype>
#include <limits>

#include "descartes/error.hpp"

namespace descartes {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NonIntegralVertices: return "NonIntegralVertices";
    case ErrorKind::NegativeOrientation: return "NegativeOrientation";
    case ErrorKind::ComplexSolutions: return "ComplexSolutions";
    case ErrorKind::CurlViolation: return "CurlViolation";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorKind::NoConsistentPlacement: return "NoConsistentPlacement";
    case ErrorKind::ZeroCurvature: return "ZeroCurvature";
    case ErrorKind::CollinearTangencyPoints: return "CollinearTangencyPoints";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(ErrorKind::ParseError, "negative denominator in '" + std::string(text) + "'");
  }
  return Rational(num, parse_integer(den_text, text));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
  const mpz_class& n = value_.get_num();
  if (!is_integer() || !n.fits_slong_p()) {
    throw Error(ErrorKind::NonIntegral, to_string() + " is not a 64-bit integer");
  }
  return static_cast<std::int64_t>(n.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
}

}  // namespace descartes
