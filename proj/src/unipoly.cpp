#include "hyperdet/unipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace hyperdet {

UniPoly::UniPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return linear(Rational::zero(), Rational::one()); }

UniPoly UniPoly::linear(Rational c0, Rational c1) {
  return UniPoly(std::vector<Rational>{std::move(c0), std::move(c1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(size_t i) const {
  static const Rational kZero;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rational UniPoly::eval(const Rational& y) const {
  Rational acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= y;
    acc += coeffs_[i];
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * g + UniPoly(coeffs_[i]);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> out;
  out.reserve(a.coeffs_.size());
  for (const Rational& c : a.coeffs_) out.push_back(-c);
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
  if (c.is_zero()) return UniPoly();
  std::vector<Rational> out;
  out.reserve(a.coeffs_.size());
  for (const Rational& x : a.coeffs_) out.push_back(x * c);
  return UniPoly(std::move(out));
}

std::string UniPoly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag.is_one();
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace hyperdet
