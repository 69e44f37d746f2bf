#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdet/rational.hpp"
#include "hyperdet/unipoly.hpp"

namespace hyperdet {

/// Scalar ring contract shared by Rational and UniPoly: exact +,-,*, equality,
/// and named zero/one. Everything the tensor algorithms need.
template <class S>
concept RingScalar = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { S::zero() } -> std::convertible_to<S>;
  { S::one() } -> std::convertible_to<S>;
  { scale(a, Rational::one()) } -> std::convertible_to<S>;
};

/// Multi-index (i_1,...,i_d), one value per axis, each in {0,...,n-1}.
using IndexTuple = std::vector<int>;

inline int index_sum(const IndexTuple& idx) {
  int s = 0;
  for (int v : idx) s += v;
  return s;
}

/// One sorted duplicate-free subset of {0,...,n-1} per axis.
struct SubsetFamily {
  std::vector<std::vector<int>> subsets;

  size_t axes() const { return subsets.size(); }
  /// Throws unless every subset is sorted strictly increasing within [0, dim).
  void validate(int dim) const;
  /// Throws unless all subsets share one cardinality; returns it.
  size_t uniform_size() const;
};

/// Dense order-d dimension-n array of ring scalars, row-major with the first
/// index most significant. Treat as immutable once built.
template <RingScalar S>
class Hypermatrix {
 public:
  Hypermatrix(int order, int dim)
      : order_(check_order(order)), dim_(check_dim(dim)), entries_(pow_size(order, dim)) {}

  Hypermatrix(int order, int dim, std::vector<S> entries)
      : order_(check_order(order)), dim_(check_dim(dim)), entries_(std::move(entries)) {
    if (entries_.size() != pow_size(order_, dim_))
      throw std::invalid_argument("Hypermatrix: entry count must be dim^order");
  }

  /// Builds entry-by-entry from gen(IndexTuple) -> S, row-major.
  template <class Gen>
  static Hypermatrix build(int order, int dim, Gen&& gen) {
    Hypermatrix m(order, dim);
    IndexTuple idx(static_cast<size_t>(order), 0);
    for (size_t lin = 0; lin < m.entries_.size(); ++lin) {
      m.entries_[lin] = gen(static_cast<const IndexTuple&>(idx));
      m.advance(idx);
    }
    return m;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  size_t size() const { return entries_.size(); }

  const S& operator[](size_t linear) const { return entries_[linear]; }
  const std::vector<S>& entries() const { return entries_; }

  size_t linear_index(const IndexTuple& idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw std::invalid_argument("Hypermatrix: index tuple length != order");
    size_t lin = 0;
    for (int v : idx) {
      if (v < 0 || v >= dim_) throw std::out_of_range("Hypermatrix: index out of range");
      lin = lin * static_cast<size_t>(dim_) + static_cast<size_t>(v);
    }
    return lin;
  }

  const S& at(const IndexTuple& idx) const { return entries_[linear_index(idx)]; }

  /// Row-major odometer step; wraps back to all-zero after the last tuple.
  void advance(IndexTuple& idx) const {
    for (size_t t = idx.size(); t-- > 0;) {
      if (++idx[t] < dim_) return;
      idx[t] = 0;
    }
  }

  friend Hypermatrix operator+(const Hypermatrix& a, const Hypermatrix& b) {
    if (a.order_ != b.order_ || a.dim_ != b.dim_)
      throw std::invalid_argument("Hypermatrix: shape mismatch in addition");
    Hypermatrix out(a.order_, a.dim_);
    for (size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
  }

  friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  static int check_order(int order) {
    if (order < 1) throw std::invalid_argument("Hypermatrix: order must be positive");
    return order;
  }
  static int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("Hypermatrix: dim must be positive");
    return dim;
  }
  static size_t pow_size(int order, int dim) {
    size_t s = 1;
    for (int t = 0; t < order; ++t) {
      if (s > (size_t{1} << 48) / static_cast<size_t>(dim))
        throw std::invalid_argument("Hypermatrix: dim^order too large");
      s *= static_cast<size_t>(dim);
    }
    return s;
  }

  int order_;
  int dim_;
  std::vector<S> entries_;
};

/// Dense n x m matrix over a ring scalar; used for GL factors and the
/// sign-Pascal matrix.
template <RingScalar S>
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: bad shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& at(int i, int j) { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }
  const S& at(int i, int j) const { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_, cols_;
  std::vector<S> e_;
};

/// Classical determinant by Bareiss fraction-free elimination. Exact over
/// Rational; independent of every hyperdeterminant code path.
Rational classical_determinant(Matrix<Rational> m);

}  // namespace hyperdet
