#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "oddgroup/errors.hpp"
#include "oddgroup/ring.hpp"

namespace oddgroup {

// Theta = {1..n, 0, -n..-1}; rows and columns are stored in this order.
inline int position(int n, int i) { return i > 0 ? i - 1 : (i == 0 ? n : 2 * n + 1 + i); }
inline int index_at(int n, int p) { return p < n ? p + 1 : (p == n ? 0 : p - 2 * n - 1); }
inline int eps(int i) { return i > 0 ? 1 : -1; }

std::vector<int> theta(int n);
std::vector<int> theta_hb(int n);
bool in_theta(int n, int i);

template <class Scalar>
using ThetaMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using ThetaColumnT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using ThetaRowT = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using ThetaMatrix = ThetaMatrixT<RingElem>;
using ThetaColumn = ThetaColumnT<RingElem>;
using ThetaRow = ThetaRowT<RingElem>;

template <class Derived>
int theta_n(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<int>(std::max(a.rows(), a.cols()) - 1) / 2;
}

template <class Derived>
decltype(auto) at(Eigen::MatrixBase<Derived>& a, int i, int j) {
  const int n = theta_n(a);
  return a(position(n, i), position(n, j));
}

template <class Derived>
typename Derived::Scalar at(const Eigen::MatrixBase<Derived>& a, int i, int j) {
  const int n = theta_n(a);
  return a(position(n, i), position(n, j));
}

template <class Derived>
decltype(auto) at(Eigen::MatrixBase<Derived>& v, int i) {
  return v(position(theta_n(v), i));
}

template <class Derived>
typename Derived::Scalar at(const Eigen::MatrixBase<Derived>& v, int i) {
  return v(position(theta_n(v), i));
}

ThetaMatrix zero_matrix(const Ring& ring, int n);
ThetaMatrix identity(const Ring& ring, int n);
// e^{ij}: one at (i, j), zero elsewhere.
ThetaMatrix basis_matrix(const Ring& ring, int n, int i, int j);
ThetaColumn zero_column(const Ring& ring, int n);
ThetaColumn basis_column(const Ring& ring, int n, int i);

template <class Scalar>
ThetaMatrixT<Scalar> mat_mul(const ThetaMatrixT<Scalar>& a, const ThetaMatrixT<Scalar>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("dimension mismatch in mat_mul");
  return a.lazyProduct(b);
}

// Characteristic polynomial coefficients c_0 = 1, ..., c_N of det(tI - a)
// by the division-free Samuelson-Berkowitz recursion.
template <class Scalar>
std::vector<Scalar> characteristic_coefficients(const ThetaMatrixT<Scalar>& a) {
  const Eigen::Index size = a.rows();
  std::vector<Scalar> p{Scalar(1)};
  for (Eigen::Index r = 0; r < size; ++r) {
    // Leading (r+1)x(r+1) block split as [[M, C], [R, d]].
    std::vector<Scalar> q(static_cast<std::size_t>(r) + 2, Scalar(0));
    q[0] = Scalar(1);
    q[1] = -a(r, r);
    if (r > 0) {
      ThetaColumnT<Scalar> v = a.block(0, r, r, 1);
      const ThetaMatrixT<Scalar> m = a.topLeftCorner(r, r);
      const ThetaRowT<Scalar> row = a.block(r, 0, 1, r);
      for (Eigen::Index k = 2; k <= r + 1; ++k) {
        Scalar s = Scalar(0);
        for (Eigen::Index t = 0; t < r; ++t) s = s + row(t) * v(t);
        q[static_cast<std::size_t>(k)] = -s;
        v = m.lazyProduct(v).eval();
      }
    }
    std::vector<Scalar> next(p.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < p.size(); ++j) next[i] = next[i] + q[i - j] * p[j];
    }
    p = std::move(next);
  }
  return p;
}

template <class Scalar>
Scalar determinant(const ThetaMatrixT<Scalar>& a) {
  auto c = characteristic_coefficients(a);
  Scalar det = c.back();
  return a.rows() % 2 == 0 ? det : -det;
}

// adj(a) = (-1)^(N-1) (a^(N-1) + c_1 a^(N-2) + ... + c_(N-1) I), by Cayley-Hamilton.
template <class Scalar>
ThetaMatrixT<Scalar> adjugate(const ThetaMatrixT<Scalar>& a) {
  const Eigen::Index size = a.rows();
  auto c = characteristic_coefficients(a);
  ThetaMatrixT<Scalar> acc = ThetaMatrixT<Scalar>::Zero(size, size);
  for (Eigen::Index t = 0; t < size; ++t) acc(t, t) = Scalar(1);
  for (Eigen::Index k = 1; k < size; ++k) {
    acc = a.lazyProduct(acc).eval();
    for (Eigen::Index t = 0; t < size; ++t) acc(t, t) = acc(t, t) + c[static_cast<std::size_t>(k)];
  }
  if (size % 2 == 0) acc = -acc;
  return acc;
}

// Adjugate-based inverse; empty when the determinant is not a unit.
std::optional<ThetaMatrix> mat_inv(const ThetaMatrix& a);
ThetaMatrix mat_inv_or_throw(const ThetaMatrix& a);

ThetaMatrix conjugate(const ThetaMatrix& h, const ThetaMatrix& g);
ThetaMatrix commutator(const ThetaMatrix& a, const ThetaMatrix& b);

bool is_identity(const ThetaMatrix& a);

}  // namespace oddgroup
