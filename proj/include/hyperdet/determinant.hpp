#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "hyperdet/budget.hpp"
#include "hyperdet/combinatorics.hpp"
#include "hyperdet/hypermatrix.hpp"
#include "hyperdet/parallel.hpp"

namespace hyperdet {

namespace detail {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int t = 2; t <= n; ++t) f *= static_cast<std::uint64_t>(t);
  return f;
}

/// base^exp, saturating at cap + 1.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (unsigned t = 0; t < exp; ++t) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

struct SignedPermutations {
  std::vector<std::vector<int>> perms;  // lexicographic
  std::vector<int> signs;
};

inline SignedPermutations all_permutations(int n) {
  SignedPermutations out;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    out.perms.push_back(p);
    out.signs.push_back(inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Inversions between two disjoint ascending words A then B: #{(a,b): a > b}.
inline int crossing_inversions(const std::vector<int>& a, const std::vector<int>& b) {
  int inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return inv;
}

}  // namespace detail

/// Hyperdeterminant by direct permutation-sum enumeration; the reference
/// oracle every other algorithm is validated against. For even order the
/// first permutation is fixed to the identity and the 1/n! factor dropped
/// (equivalent by relabeling); odd order enumerates all tuples, which makes
/// the cancellation explicit for dim >= 2.
template <RingScalar S>
S det_permutation_oracle(const Hypermatrix<S>& M, const EvalBudget& budget = {}) {
  const int d = M.order();
  const int n = M.dim();
  const bool even = d % 2 == 0;
  const std::uint64_t nfact = detail::factorial_u64(n);
  const unsigned tuple_len = static_cast<unsigned>(even ? d - 1 : d);
  const std::uint64_t total = detail::checked_pow(nfact, tuple_len, budget.max_products);
  if (total > budget.max_products)
    throw budget_error("det_permutation_oracle: n!^(d-1) exceeds the product budget");

  const detail::SignedPermutations sp = detail::all_permutations(n);
  const auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    S acc = S::zero();
    std::vector<const std::vector<int>*> sigma(tuple_len);
    for (std::uint64_t lin = begin; lin < end; ++lin) {
      std::uint64_t rest = lin;
      int sign = 1;
      for (unsigned t = 0; t < tuple_len; ++t) {
        const size_t which = static_cast<size_t>(rest % nfact);
        rest /= nfact;
        sigma[t] = &sp.perms[which];
        sign *= sp.signs[which];
      }
      S term = S::one();
      bool zero = false;
      for (int i = 0; i < n; ++i) {
        size_t li = even ? static_cast<size_t>(i) : static_cast<size_t>((*sigma[0])[i]);
        for (unsigned t = even ? 0u : 1u; t < tuple_len; ++t)
          li = li * static_cast<size_t>(n) + static_cast<size_t>((*sigma[t])[i]);
        const S& e = M[li];
        if (e.is_zero()) {
          zero = true;
          break;
        }
        term = term * e;
      }
      if (zero) continue;
      if (sign > 0)
        acc = acc + term;
      else
        acc = acc - term;
    }
    return acc;
  };
  S sum = parallel_reduce(total, S::zero(), budget.threads, chunk,
                          [](S a, S b) { return a + b; });
  if (even) return sum;
  return scale(sum, Rational::one() / factorial(static_cast<unsigned>(n)));
}

/// Hyperdeterminant via the n-th power in the d-fold tensor product of
/// Grassmann algebras: dynamic programming over d-tuples of index subsets,
/// one cardinality level at a time. Keys pack the d subset masks (n bits
/// each) into a 128-bit word, so disjointness is one AND and the merge sign
/// is one masked popcount.
template <RingScalar S>
S det_wedge(const Hypermatrix<S>& M, const EvalBudget& budget = {}) {
  const int d = M.order();
  const int n = M.dim();
  if (d % 2 != 0) throw std::invalid_argument("det_wedge: odd order");
  if (n * d > 128)
    throw budget_error("det_wedge: key capacity exceeded (dim * order > 128)");
  {
    long double state = 0.0L;
    for (int p = 0; p <= n; ++p) {
      long double c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(p)).to_double();
      long double keys = 1.0L;
      for (int t = 0; t < d; ++t) keys *= c;
      state += keys;
    }
    if (state * 64.0L > static_cast<long double>(budget.max_state_bytes))
      throw budget_error("det_wedge: level state exceeds the memory budget");
  }

  using Key = unsigned __int128;
  struct KeyHash {
    size_t operator()(Key k) const {
      std::uint64_t lo = static_cast<std::uint64_t>(k);
      std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
      std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ULL;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebULL;
      x ^= x >> 31;
      return static_cast<size_t>(x);
    }
  };
  using State = std::unordered_map<Key, S, KeyHash>;

  struct Term {
    Key key;    // one singleton bit per axis field
    Key above;  // per axis, the bits strictly above that index
    const S* value;
  };
  std::vector<Term> terms;
  terms.reserve(M.size());
  {
    IndexTuple idx(static_cast<size_t>(d), 0);
    for (size_t lin = 0; lin < M.size(); ++lin, M.advance(idx)) {
      const S& e = M[lin];
      if (e.is_zero()) continue;
      Key key = 0;
      Key above = 0;
      const Key field_ones = (Key{1} << n) - 1;
      for (int t = 0; t < d; ++t) {
        const int i = idx[static_cast<size_t>(t)];
        const Key bit = Key{1} << i;
        const Key up = field_ones & ~((Key{2} << i) - 1);
        key |= bit << (t * n);
        above |= up << (t * n);
      }
      terms.push_back({key, above, &e});
    }
  }
  if (terms.empty()) return S::zero();

  const auto popcount128 = [](Key k) {
    return __builtin_popcountll(static_cast<std::uint64_t>(k)) +
           __builtin_popcountll(static_cast<std::uint64_t>(k >> 64));
  };

  State state;
  for (const Term& t : terms) {
    auto [it, fresh] = state.try_emplace(t.key, *t.value);
    if (!fresh) it->second = it->second + *t.value;
  }
  for (int level = 1; level < n; ++level) {
    State next;
    next.reserve(state.size());
    for (const auto& [key, coeff] : state) {
      if (coeff.is_zero()) continue;
      for (const Term& t : terms) {
        if ((key & t.key) != 0) continue;  // some axis index already used
        const bool negative = popcount128(key & t.above) % 2 != 0;
        S contrib = coeff * *t.value;
        const Key nk = key | t.key;
        auto [it, fresh] = next.try_emplace(nk, S::zero());
        if (negative)
          it->second = it->second - contrib;
        else
          it->second = it->second + contrib;
      }
    }
    state = std::move(next);
  }

  Key full = 0;
  const Key field_ones = (Key{1} << n) - 1;
  for (int t = 0; t < d; ++t) full |= field_ones << (t * n);
  auto it = state.find(full);
  if (it == state.end()) return S::zero();
  return scale(it->second, Rational::one() / factorial(static_cast<unsigned>(n)));
}

/// Restriction of M to one subset of indices per axis (all of equal size m),
/// reindexed by position into an m-dimensional hypermatrix.
template <RingScalar S>
Hypermatrix<S> subtensor(const Hypermatrix<S>& M, const SubsetFamily& F) {
  if (F.axes() != static_cast<size_t>(M.order()))
    throw std::invalid_argument("subtensor: family size != order");
  F.validate(M.dim());
  const size_t m = F.uniform_size();
  if (m == 0) throw std::invalid_argument("subtensor: empty subsets");
  IndexTuple real(static_cast<size_t>(M.order()));
  return Hypermatrix<S>::build(M.order(), static_cast<int>(m), [&](const IndexTuple& pos) {
    for (size_t t = 0; t < pos.size(); ++t)
      real[t] = F.subsets[t][static_cast<size_t>(pos[t])];
    return M.at(real);
  });
}

/// Sign epsilon(I, J) of the complementary pair: product over axes of the
/// sign of the word "I_s ascending then J_s ascending" as a permutation of
/// {0,...,n-1}. Throws unless (I_s, J_s) partitions {0,...,n-1} on every
/// axis.
inline int split_sign(const SubsetFamily& I, const SubsetFamily& J, int n) {
  if (I.axes() != J.axes()) throw std::invalid_argument("split_sign: axis count mismatch");
  I.validate(n);
  J.validate(n);
  int parity = 0;
  for (size_t s = 0; s < I.axes(); ++s) {
    const auto& a = I.subsets[s];
    const auto& b = J.subsets[s];
    if (a.size() + b.size() != static_cast<size_t>(n))
      throw std::invalid_argument("split_sign: not a partition");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : a) seen[static_cast<size_t>(x)] = 1;
    for (int x : b) {
      if (seen[static_cast<size_t>(x)])
        throw std::invalid_argument("split_sign: not a partition");
      seen[static_cast<size_t>(x)] = 1;
    }
    parity += detail::crossing_inversions(a, b);
  }
  return parity % 2 == 0 ? 1 : -1;
}

/// Action of (g^(1),...,g^(d)) on M: contracts axis t with g^(t), i.e. the
/// result entry at I is sum_J M_J prod_t g^(t)[i_t][j_t].
template <RingScalar S>
Hypermatrix<S> gl_action(const std::vector<Matrix<S>>& gs, const Hypermatrix<S>& M) {
  const int d = M.order();
  const int n = M.dim();
  if (gs.size() != static_cast<size_t>(d))
    throw std::invalid_argument("gl_action: need one matrix per axis");
  for (const auto& g : gs)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("gl_action: matrix shape mismatch");

  std::vector<S> cur = M.entries();
  std::vector<S> out(cur.size());
  size_t inner = M.size() / static_cast<size_t>(n);  // stride of axis 0
  for (int t = 0; t < d; ++t) {
    const Matrix<S>& g = gs[static_cast<size_t>(t)];
    const size_t outer = M.size() / (inner * static_cast<size_t>(n));
    for (size_t o = 0; o < outer; ++o) {
      const size_t base = o * static_cast<size_t>(n) * inner;
      for (int i = 0; i < n; ++i) {
        for (size_t in = 0; in < inner; ++in) {
          S sum = S::zero();
          for (int j = 0; j < n; ++j) {
            const S& gij = g.at(i, j);
            if (gij.is_zero()) continue;
            const S& x = cur[base + static_cast<size_t>(j) * inner + in];
            if (x.is_zero()) continue;
            sum = sum + gij * x;
          }
          out[base + static_cast<size_t>(i) * inner + in] = std::move(sum);
        }
      }
    }
    cur.swap(out);
    inner /= static_cast<size_t>(n);
  }
  return Hypermatrix<S>(d, n, std::move(cur));
}

/// Minor summation: sum over r and complementary subset families of
/// epsilon(I, J) Det(M[I]) Det(N[J]); equals Det(M + N).
template <RingScalar S>
S minor_summation(const Hypermatrix<S>& M, const Hypermatrix<S>& N,
                  const EvalBudget& budget = {}) {
  const int d = M.order();
  const int n = M.dim();
  if (N.order() != d || N.dim() != n)
    throw std::invalid_argument("minor_summation: shape mismatch");
  if (d % 2 != 0) throw std::invalid_argument("minor_summation: odd order");

  std::uint64_t pairs = 0;
  for (int r = 0; r <= n; ++r) {
    const std::uint64_t c = static_cast<std::uint64_t>(
        binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)).to_double());
    pairs += detail::checked_pow(c, static_cast<unsigned>(d), budget.max_products);
    if (pairs > budget.max_products)
      throw budget_error("minor_summation: subset family count exceeds the product budget");
  }

  S acc = S::zero();
  for (int r = 0; r <= n; ++r) {
    if (r == 0) {
      acc = acc + det_wedge(N, budget);
      continue;
    }
    if (r == n) {
      acc = acc + det_wedge(M, budget);
      continue;
    }
    // All r-subsets of {0,...,n-1} with complements and crossing signs.
    struct Split {
      std::vector<int> sub, comp;
      int parity;
    };
    std::vector<Split> splits;
    std::vector<int> pick(static_cast<size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Split sp;
      sp.sub = pick;
      std::vector<char> in(static_cast<size_t>(n), 0);
      for (int x : pick) in[static_cast<size_t>(x)] = 1;
      for (int x = 0; x < n; ++x)
        if (!in[static_cast<size_t>(x)]) sp.comp.push_back(x);
      sp.parity = detail::crossing_inversions(sp.sub, sp.comp) % 2;
      splits.push_back(std::move(sp));
      // next combination in lexicographic order
      int t = r - 1;
      while (t >= 0 && pick[static_cast<size_t>(t)] == n - r + t) --t;
      if (t < 0) break;
      ++pick[static_cast<size_t>(t)];
      for (int u = t + 1; u < r; ++u)
        pick[static_cast<size_t>(u)] = pick[static_cast<size_t>(u - 1)] + 1;
    }

    std::vector<size_t> choice(static_cast<size_t>(d), 0);
    while (true) {
      SubsetFamily I, J;
      int parity = 0;
      for (size_t t = 0; t < static_cast<size_t>(d); ++t) {
        const Split& sp = splits[choice[t]];
        I.subsets.push_back(sp.sub);
        J.subsets.push_back(sp.comp);
        parity += sp.parity;
      }
      S term = det_wedge(subtensor(M, I), budget) * det_wedge(subtensor(N, J), budget);
      if (parity % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
      size_t t = static_cast<size_t>(d);
      while (t-- > 0) {
        if (++choice[t] < splits.size()) break;
        choice[t] = 0;
        if (t == 0) goto done_r;
      }
    }
  done_r:;
  }
  return acc;
}

/// Hyperdeterminant by recursive expansion along the first axis: fixes the
/// smallest remaining index on axis 1 and sums signed entry times
/// complementary-minor hyperdeterminant. The sign at each level is
/// (-1)^(sum of 0-based positions), pinned by the oracle equivalence tests.
template <RingScalar S>
S expand_first_index(const Hypermatrix<S>& M, const EvalBudget& budget = {}) {
  const int d = M.order();
  const int n = M.dim();
  if (d % 2 != 0) throw std::invalid_argument("expand_first_index: odd order");
  if (detail::checked_pow(detail::factorial_u64(n), static_cast<unsigned>(d - 1),
                          budget.max_products) > budget.max_products)
    throw budget_error("expand_first_index: n!^(d-1) exceeds the product budget");

  std::vector<std::vector<int>> avail(static_cast<size_t>(d));
  for (auto& a : avail) {
    a.resize(static_cast<size_t>(n));
    std::iota(a.begin(), a.end(), 0);
  }

  const auto rec = [&](const auto& self, const std::vector<std::vector<int>>& ax) -> S {
    const size_t m = ax[0].size();
    IndexTuple real(static_cast<size_t>(d));
    if (m == 1) {
      for (size_t t = 0; t < ax.size(); ++t) real[t] = ax[t][0];
      return M.at(real);
    }
    S acc = S::zero();
    std::vector<size_t> pos(static_cast<size_t>(d), 0);  // pos[0] stays 0
    while (true) {
      int parity = 0;
      real[0] = ax[0][0];
      for (size_t t = 1; t < ax.size(); ++t) {
        real[t] = ax[t][pos[t]];
        parity += static_cast<int>(pos[t]);
      }
      const S& entry = M.at(real);
      if (!entry.is_zero()) {
        std::vector<std::vector<int>> sub(ax);
        sub[0].erase(sub[0].begin());
        for (size_t t = 1; t < sub.size(); ++t)
          sub[t].erase(sub[t].begin() + static_cast<std::ptrdiff_t>(pos[t]));
        S term = entry * self(self, sub);
        if (parity % 2 == 0)
          acc = acc + term;
        else
          acc = acc - term;
      }
      size_t t = static_cast<size_t>(d);
      bool done = true;
      while (t-- > 1) {
        if (++pos[t] < m) {
          done = false;
          break;
        }
        pos[t] = 0;
      }
      if (done) break;
    }
    return acc;
  };
  return rec(rec, avail);
}

}  // namespace hyperdet
