#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hyperdet {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }  // NOLINT: implicit by design
  Rational(int n) : Rational(static_cast<long>(n)) {}       // NOLINT
  Rational(long num, long den);
  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  /// Parses "p" or "p/q" in base 10 (optional leading '-'). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(std::string_view s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  /// Decimal rendering "p" or "p/q"; exact inverse of from_string.
  std::string str() const;
  double to_double() const { return mpq_get_d(q_); }

  std::string numerator_str() const;
  std::string denominator_str() const;

  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.q_, a.q_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t q_;
};

/// Exact integer power r^e (e >= 0).
Rational pow(const Rational& r, unsigned e);

}  // namespace hyperdet
