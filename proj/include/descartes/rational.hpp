#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace descartes {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
  /// Throws Error{ParseError} on a zero denominator.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "p" or "p/q" with optional sign, e.g. "-1/2". Throws Error{ParseError}.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Integer value; only valid when is_integer() and the value fits.
  std::int64_t to_int64() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);

/// Rational square root when r is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace descartes

template <>
struct std::hash<descartes::Rational> {
  std::size_t operator()(const descartes::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
