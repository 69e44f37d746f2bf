#include "hyperdet/combinatorics.hpp"

#include <stdexcept>

namespace hyperdet {

Rational factorial(unsigned m) {
  Rational acc = Rational::one();
  for (unsigned t = 2; t <= m; ++t) acc *= Rational(static_cast<long>(t));
  return acc;
}

Rational binomial(unsigned m, unsigned j) {
  if (j > m) return Rational::zero();
  if (j > m - j) j = m - j;
  Rational acc = Rational::one();
  for (unsigned t = 0; t < j; ++t) {
    acc *= Rational(static_cast<long>(m - t));
    acc /= Rational(static_cast<long>(t + 1));
  }
  return acc;
}

Rational multinomial(std::span<const unsigned> parts) {
  if (parts.empty()) throw std::invalid_argument("multinomial: empty parts");
  unsigned total = 0;
  Rational acc = Rational::one();
  // (p1+...+pi choose pi) telescopes to the multinomial coefficient.
  for (unsigned p : parts) {
    total += p;
    acc *= binomial(total, p);
  }
  return acc;
}

Rational multinomial(std::initializer_list<unsigned> parts) {
  return multinomial(std::span<const unsigned>(parts.begin(), parts.size()));
}

Rational pochhammer(const Rational& x, unsigned m) {
  Rational acc = Rational::one();
  Rational term = x;
  for (unsigned t = 0; t < m; ++t) {
    acc *= term;
    term += Rational::one();
  }
  return acc;
}

}  // namespace hyperdet
