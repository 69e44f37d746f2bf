#include "hyperdet/hankel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperdet {

SparseMultiPoly::SparseMultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("SparseMultiPoly: need at least one variable");
}

SparseMultiPoly SparseMultiPoly::constant(int nvars, Rational c) {
  SparseMultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), std::move(c));
  return p;
}

void SparseMultiPoly::add_term(std::vector<int> exponents, const Rational& c) {
  if (exponents.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("SparseMultiPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(std::move(exponents), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparseMultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational::zero() : it->second;
}

Rational SparseMultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("SparseMultiPoly: point arity mismatch");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t v = 0; v < e.size(); ++v)
      term *= pow(point[v], static_cast<unsigned>(e[v]));
    acc += term;
  }
  return acc;
}

SparseMultiPoly SparseMultiPoly::times_difference(int var_j, int var_i,
                                                  const EvalBudget& budget) const {
  if (var_i < 0 || var_j < 0 || var_i >= nvars_ || var_j >= nvars_ || var_i == var_j)
    throw std::invalid_argument("SparseMultiPoly: bad variable pair");
  SparseMultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> up = e;
    ++up[static_cast<size_t>(var_j)];
    out.add_term(std::move(up), c);
    std::vector<int> down = e;
    ++down[static_cast<size_t>(var_i)];
    out.add_term(std::move(down), -c);
  }
  // 64 bytes is a coarse per-term estimate (exponents plus one small rational).
  if (out.term_count() * 64 > budget.max_state_bytes)
    throw budget_error("SparseMultiPoly: term count exceeds the memory budget");
  return out;
}

Hypermatrix<Rational> build_hankel(const MomentSequence& m, int n, int d) {
  return build_hankel_moments<Rational>(std::span<const Rational>(m.values), n, d);
}

SparseMultiPoly vandermonde_power(int n, int k, const EvalBudget& budget) {
  if (n < 1 || k < 1) throw std::invalid_argument("vandermonde_power: need n, k >= 1");
  SparseMultiPoly acc = SparseMultiPoly::constant(n, Rational::one());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int rep = 0; rep < 2 * k; ++rep) acc = acc.times_difference(j, i, budget);
  return acc;
}

CoefficientTable c_lambda_table(int n, int k, const EvalBudget& budget) {
  const SparseMultiPoly delta = vandermonde_power(n, k, budget);
  const Rational inv_nfact = Rational::one() / factorial(static_cast<unsigned>(n));
  CoefficientTable table;
  table.n = n;
  table.k = k;
  for (const auto& [e, c] : delta.terms()) {
    std::vector<int> lambda = e;
    std::sort(lambda.begin(), lambda.end());
    table.coeffs[std::move(lambda)] += c;
  }
  for (auto it = table.coeffs.begin(); it != table.coeffs.end();) {
    it->second *= inv_nfact;
    if (it->second.is_zero())
      it = table.coeffs.erase(it);
    else
      ++it;
  }
  return table;
}

Rational hankel_det_fast(const MomentSequence& m, int n, int k, const EvalBudget& budget) {
  return hankel_det_fast<Rational>(std::span<const Rational>(m.values), n, k, budget);
}

Rational top_coefficient(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("top_coefficient: need n, k >= 1");
  const std::vector<unsigned> parts(static_cast<size_t>(n), static_cast<unsigned>(k));
  Rational value = multinomial(std::span<const unsigned>(parts)) / factorial(static_cast<unsigned>(n));
  // Sign is (-1)^(k*n(n-1)/2); cross-validated against the expansion in tests.
  const bool negative = (static_cast<long>(k) * n * (n - 1) / 2) % 2 != 0;
  return negative ? -value : value;
}

Rational dyson_constant_term(int n, int k, const EvalBudget& budget) {
  if (n < 1 || k < 1) throw std::invalid_argument("dyson_constant_term: need n, k >= 1");
  // Direct route: clear denominators with prod_i x_i^(k(n-1)), i.e. expand
  // prod over ordered pairs (i != j) of (x_j - x_i)^k and read the central
  // coefficient.
  SparseMultiPoly poly = SparseMultiPoly::constant(n, Rational::one());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int rep = 0; rep < k; ++rep) poly = poly.times_difference(j, i, budget);
    }
  const std::vector<int> central(static_cast<size_t>(n), k * (n - 1));
  const Rational direct = poly.coefficient(central);

  const std::vector<unsigned> parts(static_cast<size_t>(n), static_cast<unsigned>(k));
  const Rational closed = multinomial(std::span<const unsigned>(parts));
  if (direct != closed)
    throw std::logic_error("dyson_constant_term: expansion disagrees with the closed form");

  // Cross-check against the Hankel top coefficient: C = (-1)^(k*n(n-1)/2) n! d.
  const bool negative = (static_cast<long>(k) * n * (n - 1) / 2) % 2 != 0;
  Rational via_top = factorial(static_cast<unsigned>(n)) * top_coefficient(n, k);
  if (negative) via_top = -via_top;
  if (via_top != closed)
    throw std::logic_error("dyson_constant_term: top-coefficient relation violated");
  return closed;
}

}  // namespace hyperdet
