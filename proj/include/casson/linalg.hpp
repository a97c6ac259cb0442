#pragma once

// Exact integer linear algebra over any Eigen-compatible integral scalar
// (BigInt in production; fixed-width types only in tests with small entries).

#include "casson/core.hpp"

#include <utility>
#include <vector>

namespace casson {

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

} // namespace detail

/// Fraction-free (Bareiss) determinant. The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols())
    throw ShapeError("determinant of a non-square " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " matrix");
  Matrix<Scalar> m = a;
  const Index n = m.rows();
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar d = n == 0 ? Scalar(1) : m(n - 1, n - 1);
  return negate ? Scalar(-d) : d;
}

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ... .
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  std::vector<Scalar> diag;

  Index rank() const {
    Index r = 0;
    for (const Scalar& d : diag)
      if (d != Scalar(0)) ++r;
    return r;
  }
};

/// Smith normal form by unimodular row and column moves. Each pivot is a
/// nonzero entry of minimal absolute value in the remaining block.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using detail::magnitude;
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithForm<Scalar> s{Matrix<Scalar>::Identity(rows, rows), a, Matrix<Scalar>::Identity(cols, cols), {}};
  Matrix<Scalar>& d = s.D;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      Index pr = -1, pc = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (d(i, j) != Scalar(0) && (pr < 0 || magnitude(d(i, j)) < magnitude(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      if (pr != t) {
        d.row(t).swap(d.row(pr));
        s.U.row(t).swap(s.U.row(pr));
      }
      if (pc != t) {
        d.col(t).swap(d.col(pc));
        s.V.col(t).swap(s.V.col(pc));
      }

      bool remainder = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        s.U.row(i) -= q * s.U.row(t);
        remainder = remainder || d(i, t) != Scalar(0);
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        s.V.col(j) -= q * s.V.col(t);
        remainder = remainder || d(t, j) != Scalar(0);
      }
      if (remainder) continue;

      // Pivot row and column are clear; enforce divisibility into the rest.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      s.U.row(t) += s.U.row(bad);
    }
    if (d(t, t) < Scalar(0)) {
      d.row(t) = -d.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  for (Index t = 0; t < std::min(rows, cols); ++t) s.diag.push_back(d(t, t));
  return s;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return smith_normal_form(a).rank();
}

/// Basis (as columns) of the integer kernel {x : A x = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  const auto s = smith_normal_form(a);
  const Index r = s.rank();
  return s.V.rightCols(a.cols() - r);
}

/// Order of coker(A : Z^cols -> Z^rows).
template <typename Derived>
GroupOrder cokernel_order(const Eigen::MatrixBase<Derived>& a) {
  const auto s = smith_normal_form(a);
  if (s.rank() < a.rows()) return GroupOrder::infinite();
  BigInt order = 1;
  for (const auto& d : s.diag)
    if (d != 0) order *= BigInt(d);
  return GroupOrder::finite(order);
}

} // namespace casson
