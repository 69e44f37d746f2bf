#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Univariate polynomial in y with exact rational coefficients, stored
/// lowest-degree first with no trailing zeros (canonical form).
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(Rational constant);
  explicit UniPoly(std::vector<Rational> coeffs);  // trims trailing zeros

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rational::one()); }
  /// The monomial y.
  static UniPoly variable();
  /// c0 + c1*y.
  static UniPoly linear(Rational c0, Rational c1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  /// Coefficient of y^i (zero beyond the degree).
  const Rational& coeff(size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational::zero() : coeffs_.back(); }

  Rational eval(const Rational& y) const;
  /// Substitution y -> g(y).
  UniPoly compose(const UniPoly& g) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const Rational& c);
  friend UniPoly operator*(const Rational& c, const UniPoly& a) { return a * c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Human rendering like "1/72 - 1/12*y + 1/12*y^2"; "0" for zero.
  std::string str(std::string_view var = "y") const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational scale(const Rational& s, const Rational& c) { return s * c; }
inline UniPoly scale(const UniPoly& s, const Rational& c) { return s * c; }

}  // namespace hyperdet
