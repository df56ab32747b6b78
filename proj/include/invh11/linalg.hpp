#pragma once

// Small dense linear algebra over the scalar backends. Exact scalars use
// first-nonzero pivoting and decide zero exactly; floating systems go through
// the SVD in solve_float().

#include <optional>
#include <stdexcept>
#include <vector>

#include "invh11/scalar.hpp"

namespace invh11 {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), scalar_traits<S>::zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const S& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  std::vector<S> row(int r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<S> col(int c) const {
    std::vector<S> out;
    for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void append_row(const std::vector<S>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

/// Reduced row echelon form of an exact matrix with its pivot columns.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class S>
Echelon<S> rref(Matrix<S> a) {
  using T = scalar_traits<S>;
  static_assert(T::exact, "rref is for exact scalars");
  Echelon<S> out;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r) {
      if (!T::is_zero(a(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead, j));
    S p = a(lead, c);
    for (int j = 0; j < a.cols(); ++j) a(lead, j) /= p;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || T::is_zero(a(r, c))) continue;
      S f = a(r, c);
      for (int j = 0; j < a.cols(); ++j) a(r, j) -= f * a(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
int rank(const Matrix<S>& a) {
  return rref(a).rank();
}

/// Basis of {x : a x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& a) {
  using T = scalar_traits<S>;
  Echelon<S> e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<S>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<S> v(static_cast<std::size_t>(a.cols()), T::zero());
    v[static_cast<std::size_t>(free)] = T::one();
    for (int i = 0; i < e.rank(); ++i) v[static_cast<std::size_t>(e.pivots[i])] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
Matrix<S> augment(const Matrix<S>& a, const std::vector<S>& b) {
  Matrix<S> out(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    out(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  return out;
}

/// Some solution of a x = b with free variables set to zero, if one exists.
template <class S>
std::optional<std::vector<S>> particular_solution(const Matrix<S>& a, const std::vector<S>& b) {
  using T = scalar_traits<S>;
  Echelon<S> e = rref(augment(a, b));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(a.cols()), T::zero());
  for (int i = 0; i < e.rank(); ++i) x[static_cast<std::size_t>(e.pivots[i])] = e.reduced(i, a.cols());
  return x;
}

template <class S>
S hermitian_dot(const std::vector<S>& a, const std::vector<S>& b) {
  using T = scalar_traits<S>;
  S s = T::zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += T::conj(a[i]) * b[i];
  return s;
}

/// Solve a square system exactly; throws when singular.
template <class S>
std::vector<S> solve_square(const Matrix<S>& a, const std::vector<S>& b) {
  auto x = particular_solution(a, b);
  if (!x || rank(a) != a.cols()) throw std::domain_error("singular system");
  return *x;
}

/// Minimum-norm solution of a x = b (exact), if the system is consistent.
template <class S>
std::optional<std::vector<S>> min_norm_solution(const Matrix<S>& a, const std::vector<S>& b) {
  auto x0 = particular_solution(a, b);
  if (!x0) return std::nullopt;
  auto basis = nullspace(a);
  if (basis.empty()) return x0;
  // Remove the component of x0 along ker(a): x = x0 - N (N^H N)^{-1} N^H x0.
  int k = static_cast<int>(basis.size());
  Matrix<S> gram(k, k);
  std::vector<S> rhs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram(i, j) = hermitian_dot(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    rhs[static_cast<std::size_t>(i)] = hermitian_dot(basis[static_cast<std::size_t>(i)], *x0);
  }
  std::vector<S> coef = solve_square(gram, rhs);
  std::vector<S> x = *x0;
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= coef[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][j];
  return x;
}

/// Sylvester inertia of a real symmetric rational matrix, with a congruence
/// transform: transform^T * q * transform = diag(diagonal).
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  std::vector<Rational> diagonal;
  Matrix<Rational> transform;

  /// A vector v with v^T q v > 0, when positive > 0.
  std::optional<std::vector<Rational>> positive_vector() const;
  std::optional<std::vector<Rational>> negative_vector() const;
};

Inertia inertia(const Matrix<Rational>& q);

/// Result of a floating least-squares solve through the SVD.
struct FloatSolve {
  int rank_matrix = 0;
  int rank_augmented = 0;
  std::vector<double> singular_values;
  std::vector<Complex> solution;  // minimum-norm least-squares solution
  double residual = 0.0;          // |a x - b|
  bool consistent = false;        // residual <= tolerance * (1 + |b|)
};

/// Singular values below `tolerance` times the largest count as zero.
FloatSolve solve_float(const Matrix<Complex>& a, const std::vector<Complex>& b, double tolerance);

int rank_float(const Matrix<Complex>& a, double tolerance);

}  // namespace invh11
