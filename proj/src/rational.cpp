#include "strassen/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace strassen {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 value) { return value >= -kSmallMax && value <= kSmallMax; }

u128 magnitude(i128 value) {
  return value < 0 ? static_cast<u128>(-value) : static_cast<u128>(value);
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void assign_mpz(mpz_t target, i128 value) {
  u128 mag = magnitude(value);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(target, 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (value < 0) mpz_neg(target, target);
}

bool mpz_is_small(const mpz_t z) {
  return mpz_fits_slong_p(z) != 0 && mpz_cmp_si(z, -kSmallMax) >= 0;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = from_i128(value, 1);
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  *this = from_i128(numerator, denominator);
}

Rational Rational::from_i128(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Rational out;
  if (numerator == 0) return out;
  u128 g = gcd128(magnitude(numerator), static_cast<u128>(denominator));
  numerator /= static_cast<i128>(g);
  denominator /= static_cast<i128>(g);
  if (fits(numerator) && fits(denominator)) {
    out.num_ = static_cast<std::int64_t>(numerator);
    out.den_ = static_cast<std::int64_t>(denominator);
    return out;
  }
  auto big = std::make_shared<mpq_class>();
  assign_mpz(mpq_numref(big->get_mpq_t()), numerator);
  assign_mpz(mpq_denref(big->get_mpq_t()), denominator);
  out.big_ = std::move(big);
  return out;
}

Rational Rational::from_mpq(const mpq_class& value) {
  Rational out;
  const mpz_srcptr num = mpq_numref(value.get_mpq_t());
  const mpz_srcptr den = mpq_denref(value.get_mpq_t());
  if (mpz_is_small(num) && mpz_is_small(den)) {
    out.num_ = mpz_get_si(num);
    out.den_ = mpz_get_si(den);
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(value);
  return out;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class out;
  mpq_set_si(out.get_mpq_t(), num_, static_cast<unsigned long>(den_));
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view numer = body.substr(0, slash);
  std::string_view denom =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : body.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!all_digits(numer) || !all_digits(denom)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  mpz_class n(std::string(numer), 10);
  mpz_class d(std::string(denom), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (text.front() == '-') n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(q);
}

std::string Rational::str() const {
  if (!big_) return std::to_string(num_) + "/" + std::to_string(den_);
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

double Rational::to_double() const {
  if (!big_) {
    if (den_ == 1) return static_cast<double>(num_);
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  return big_->get_d();
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  if (!big_) return from_i128(den_, num_);
  mpq_class inv = 1 / *big_;
  return from_mpq(inv);
}

Rational Rational::ceil() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return Rational(q);
  }
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return from_mpq(mpq_class(out));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || big_) {
    throw std::overflow_error("not a 64-bit integer: " + str());
  }
  return num_;
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  return from_mpq(-*big_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    auto ad = static_cast<std::uint64_t>(a.den_);
    auto bd = static_cast<std::uint64_t>(b.den_);
    std::uint64_t g = gcd64(ad, bd);
    i128 num = static_cast<i128>(a.num_) * static_cast<i128>(bd / g) +
               static_cast<i128>(b.num_) * static_cast<i128>(ad / g);
    if (num == 0) return Rational{};
    std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(magnitude(num) % g), g);
    num /= static_cast<i128>(g2);
    i128 den = static_cast<i128>(ad / g) * static_cast<i128>(bd / g2);
    if (fits(num) && fits(den)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
      return out;
    }
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational{};
    auto an = static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_);
    auto bn = static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_);
    auto g1 = static_cast<std::int64_t>(
        gcd64(an, static_cast<std::uint64_t>(b.den_)));
    auto g2 = static_cast<std::int64_t>(
        gcd64(bn, static_cast<std::uint64_t>(a.den_)));
    i128 num = static_cast<i128>(a.num_ / g1) * static_cast<i128>(b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * static_cast<i128>(b.den_ / g1);
    if (fits(num) && fits(den)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
      return out;
    }
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.reciprocal();
}

Rational& Rational::operator+=(const Rational& other) {
  return *this = *this + other;
}
Rational& Rational::operator-=(const Rational& other) {
  return *this = *this - other;
}
Rational& Rational::operator*=(const Rational& other) {
  return *this = *this * other;
}
Rational& Rational::operator/=(const Rational& other) {
  return *this = *this / other;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace strassen
