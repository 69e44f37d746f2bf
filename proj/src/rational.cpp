#include "hyperdet/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hyperdet {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  // Strict format: [-]digits[/digits], no whitespace, no leading '+'.
  auto malformed = [&] {
    return std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  };
  std::string_view rest = s;
  if (!rest.empty() && rest.front() == '-') rest.remove_prefix(1);
  if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest.front()))) throw malformed();
  bool seen_slash = false;
  bool digits_after_slash = false;
  for (char c : rest) {
    if (c == '/') {
      if (seen_slash) throw malformed();
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (seen_slash) digits_after_slash = true;
    } else {
      throw malformed();
    }
  }
  if (seen_slash && !digits_after_slash) throw malformed();

  Rational r;
  if (mpq_set_str(r.q_, std::string(s).c_str(), 10) != 0) throw malformed();
  if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::str() const {
  char* cs = mpq_get_str(nullptr, 10, q_);
  std::string out(cs);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(cs, out.size() + 1);
  return out;
}

std::string Rational::numerator_str() const {
  char* cs = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string out(cs);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(cs, out.size() + 1);
  return out;
}

std::string Rational::denominator_str() const {
  char* cs = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out(cs);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(cs, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, unsigned e) {
  Rational acc = Rational::one();
  Rational base = r;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

}  // namespace hyperdet
