#include "invh11/linalg.hpp"

#include <Eigen/Dense>

namespace invh11 {

namespace {

std::optional<std::vector<Rational>> column_with_sign(const Inertia& in, int sign) {
  for (int k = 0; k < static_cast<int>(in.diagonal.size()); ++k) {
    if (sgn(in.diagonal[static_cast<std::size_t>(k)]) == sign) return in.transform.col(k);
  }
  return std::nullopt;
}

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

int count_above(const Eigen::VectorXd& sv, double tolerance) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int n = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tolerance * sv(0)) ++n;
  return n;
}

}  // namespace

std::optional<std::vector<Rational>> Inertia::positive_vector() const { return column_with_sign(*this, 1); }
std::optional<std::vector<Rational>> Inertia::negative_vector() const { return column_with_sign(*this, -1); }

Inertia inertia(const Matrix<Rational>& q) {
  const int n = q.rows();
  if (q.cols() != n) throw std::invalid_argument("inertia needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q(i, j) != q(j, i)) throw std::invalid_argument("inertia needs a symmetric matrix");

  Matrix<Rational> a = q;
  Matrix<Rational> p(n, n);
  for (int i = 0; i < n; ++i) p(i, i) = 1;

  // Congruence a <- E^T a E, tracked as p <- p E.
  auto add_multiple = [&](int target, int source, const Rational& f) {
    for (int j = 0; j < n; ++j) a(target, j) += f * a(source, j);
    for (int j = 0; j < n; ++j) a(j, target) += f * a(j, source);
    for (int j = 0; j < n; ++j) p(j, target) += f * p(j, source);
  };
  auto swap_index = [&](int x, int y) {
    for (int j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (int j = 0; j < n; ++j) std::swap(a(j, x), a(j, y));
    for (int j = 0; j < n; ++j) std::swap(p(j, x), p(j, y));
  };

  for (int k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      int diag = -1;
      for (int j = k + 1; j < n && diag < 0; ++j)
        if (sgn(a(j, j)) != 0) diag = j;
      if (diag >= 0) {
        swap_index(k, diag);
      } else {
        int off = -1;
        for (int j = k + 1; j < n && off < 0; ++j)
          if (sgn(a(k, j)) != 0) off = j;
        if (off < 0) continue;
        add_multiple(k, off, Rational(1));  // a(k,k) becomes 2 a(k,off)
      }
    }
    for (int j = k + 1; j < n; ++j) {
      if (sgn(a(j, k)) == 0) continue;
      Rational f = -a(j, k) / a(k, k);
      add_multiple(j, k, f);
    }
  }

  Inertia out;
  out.transform = p;
  for (int k = 0; k < n; ++k) {
    out.diagonal.push_back(a(k, k));
    int s = sgn(a(k, k));
    if (s > 0) ++out.positive;
    else if (s < 0) ++out.negative;
    else ++out.zero;
  }
  return out;
}

FloatSolve solve_float(const Matrix<Complex>& a, const std::vector<Complex>& b, double tolerance) {
  FloatSolve out;
  Eigen::MatrixXcd m = to_eigen(a);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];

  if (m.rows() == 0) {
    out.solution.assign(static_cast<std::size_t>(a.cols()), Complex{});
    out.consistent = true;
    return out;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  out.rank_matrix = count_above(sv, tolerance);

  Eigen::MatrixXcd aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  out.rank_augmented = count_above(Eigen::JacobiSVD<Eigen::MatrixXcd>(aug).singularValues(), tolerance);

  // Pseudo-inverse restricted to the numerically nonzero singular values.
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(m.cols());
  Eigen::VectorXcd ub = svd.matrixU().adjoint() * rhs;
  for (int i = 0; i < out.rank_matrix; ++i) x += (ub(i) / sv(i)) * svd.matrixV().col(i);
  out.solution.assign(x.data(), x.data() + x.size());
  out.residual = (m * x - rhs).norm();
  out.consistent = out.residual <= tolerance * (1.0 + rhs.norm());
  return out;
}

int rank_float(const Matrix<Complex>& a, double tolerance) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return count_above(Eigen::JacobiSVD<Eigen::MatrixXcd>(to_eigen(a)).singularValues(), tolerance);
}

}  // namespace invh11
