#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace strassen {

// Exact rational number.
//
// Values whose reduced numerator and denominator both fit in a signed 64-bit
// word (excluding INT64_MIN) are stored inline and combined with 128-bit
// intermediates; anything larger is held in an immutable, shared GMP rational.
// The representation is canonical: a value is "big" iff it does not fit, so
// equality never needs to cross representations.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q" or "p" with an optional leading '-'; q must be positive.
  // Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);
  static Rational from_mpq(const mpq_class& value);

  mpq_class to_mpq() const;

  // Canonical "p/q" form; the denominator is always written, so 1 is "1/1".
  std::string str() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_small() const { return big_ == nullptr; }

  Rational abs() const;
  Rational reciprocal() const;
  // Smallest integer >= *this.
  Rational ceil() const;
  // Throws std::overflow_error unless the value is an integer in int64 range.
  std::int64_t to_int64() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational from_i128(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace strassen
