#pragma once

#include <map>
#include <span>
#include <vector>

#include "hyperdet/budget.hpp"
#include "hyperdet/combinatorics.hpp"
#include "hyperdet/hypermatrix.hpp"

namespace hyperdet {

/// Table m_0 ... m_L of exact moments.
struct MomentSequence {
  std::vector<Rational> values;

  MomentSequence() = default;
  explicit MomentSequence(std::vector<Rational> v) : values(std::move(v)) {}

  template <class Fn>
  static MomentSequence tabulate(size_t count, Fn&& fn) {
    MomentSequence m;
    m.values.reserve(count);
    for (size_t i = 0; i < count; ++i) m.values.push_back(fn(i));
    return m;
  }

  size_t size() const { return values.size(); }
};

/// Polynomial in n variables: map from exponent tuples to exact coefficients,
/// no zero coefficients stored.
class SparseMultiPoly {
 public:
  explicit SparseMultiPoly(int nvars);
  static SparseMultiPoly constant(int nvars, Rational c);

  int nvars() const { return nvars_; }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(std::vector<int> exponents, const Rational& c);
  Rational coefficient(const std::vector<int>& exponents) const;
  Rational eval(std::span<const Rational> point) const;

  /// Exact multiplication by the linear factor (x_j - x_i).
  SparseMultiPoly times_difference(int var_j, int var_i, const EvalBudget& budget) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Coefficients c_lambda of the Hankel hyperdeterminant expansion, keyed by
/// weakly increasing exponent tuples. The 1/n! normalization is included, so
/// Det = sum_lambda c_lambda * prod_i m_{lambda_i}.
struct CoefficientTable {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> coeffs;
};

/// Order-d dimension-n Hankel hypermatrix with entries m_{|I|}. Requires
/// moments up to d*(n-1).
Hypermatrix<Rational> build_hankel(const MomentSequence& m, int n, int d);

template <RingScalar S>
Hypermatrix<S> build_hankel_moments(std::span<const S> moments, int n, int d) {
  if (moments.size() < static_cast<size_t>(d) * static_cast<size_t>(n - 1) + 1)
    throw std::invalid_argument("build_hankel: moment sequence too short");
  return Hypermatrix<S>::build(d, n,
                               [&](const IndexTuple& idx) { return moments[static_cast<size_t>(index_sum(idx))]; });
}

/// Full monomial expansion of prod_{i<j} (x_j - x_i)^(2k) over n variables.
SparseMultiPoly vandermonde_power(int n, int k, const EvalBudget& budget = {});

/// Aggregates vandermonde_power by sorted exponent tuple and applies the
/// 1/n! normalization.
CoefficientTable c_lambda_table(int n, int k, const EvalBudget& budget = {});

/// Structured Hankel hyperdeterminant of order 2k: sum over the coefficient
/// table of c_lambda * prod m_{lambda_i}. Works over any ring scalar, so the
/// same path evaluates moment tensors with polynomial entries.
template <RingScalar S>
S hankel_det_fast(std::span<const S> moments, int n, int k, const EvalBudget& budget = {}) {
  if (moments.size() < 2 * static_cast<size_t>(k) * static_cast<size_t>(n - 1) + 1)
    throw std::invalid_argument("hankel_det_fast: moment sequence too short");
  const CoefficientTable table = c_lambda_table(n, k, budget);
  S acc = S::zero();
  for (const auto& [lambda, c] : table.coeffs) {
    S prod = S::one();
    bool zero = false;
    for (int e : lambda) {
      const S& m = moments[static_cast<size_t>(e)];
      if (m.is_zero()) {
        zero = true;
        break;
      }
      prod = prod * m;
    }
    if (zero) continue;
    acc = acc + scale(prod, c);
  }
  return acc;
}

Rational hankel_det_fast(const MomentSequence& m, int n, int k, const EvalBudget& budget = {});

/// Top coefficient d_{n,k} = c_{(k(n-1),...,k(n-1))} in closed form.
Rational top_coefficient(int n, int k);

/// Dyson constant term C_{n,k} = C.T. prod_{i != j} (1 - x_i/x_j)^k,
/// computed both by direct expansion and by the multinomial closed form;
/// throws std::logic_error if any internal cross-check disagrees.
Rational dyson_constant_term(int n, int k, const EvalBudget& budget = {});

}  // namespace hyperdet
