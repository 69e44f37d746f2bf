#include "hyperdet/hypermatrix.hpp"

#include <algorithm>

namespace hyperdet {

void SubsetFamily::validate(int dim) const {
  for (const auto& sub : subsets) {
    for (size_t i = 0; i < sub.size(); ++i) {
      if (sub[i] < 0 || sub[i] >= dim)
        throw std::invalid_argument("SubsetFamily: index out of range");
      if (i > 0 && sub[i - 1] >= sub[i])
        throw std::invalid_argument("SubsetFamily: subsets must be sorted and duplicate-free");
    }
  }
}

size_t SubsetFamily::uniform_size() const {
  if (subsets.empty()) throw std::invalid_argument("SubsetFamily: empty family");
  size_t m = subsets.front().size();
  for (const auto& sub : subsets)
    if (sub.size() != m)
      throw std::invalid_argument("SubsetFamily: subsets must share one cardinality");
  return m;
}

Rational classical_determinant(Matrix<Rational> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("classical_determinant: not square");
  const int n = m.rows();
  Rational prev = Rational::one();
  int sign = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (m.at(p, p).is_zero()) {
      int swap_row = -1;
      for (int r = p + 1; r < n; ++r) {
        if (!m.at(r, p).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return Rational::zero();
      for (int c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(swap_row, c));
      sign = -sign;
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c) {
        // Bareiss update: the division by the previous pivot is exact.
        m.at(r, c) = (m.at(r, c) * m.at(p, p) - m.at(r, p) * m.at(p, c)) / prev;
      }
      m.at(r, p) = Rational::zero();
    }
    prev = m.at(p, p);
  }
  Rational det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace hyperdet
