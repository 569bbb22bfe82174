#include "oddgroup/theta_matrix.hpp"

namespace oddgroup {

std::vector<int> theta(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  out.push_back(0);
  for (int i = -n; i <= -1; ++i) out.push_back(i);
  return out;
}

std::vector<int> theta_hb(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  for (int i = -n; i <= -1; ++i) out.push_back(i);
  return out;
}

bool in_theta(int n, int i) { return i >= -n && i <= n; }

ThetaMatrix zero_matrix(const Ring& ring, int n) {
  return ThetaMatrix::Constant(2 * n + 1, 2 * n + 1, ring.zero());
}

ThetaMatrix identity(const Ring& ring, int n) {
  ThetaMatrix out = zero_matrix(ring, n);
  for (int p = 0; p < 2 * n + 1; ++p) out(p, p) = ring.one();
  return out;
}

ThetaMatrix basis_matrix(const Ring& ring, int n, int i, int j) {
  ThetaMatrix out = zero_matrix(ring, n);
  at(out, i, j) = ring.one();
  return out;
}

ThetaColumn zero_column(const Ring& ring, int n) {
  return ThetaColumn::Constant(2 * n + 1, ring.zero());
}

ThetaColumn basis_column(const Ring& ring, int n, int i) {
  ThetaColumn out = zero_column(ring, n);
  at(out, i) = ring.one();
  return out;
}

std::optional<ThetaMatrix> mat_inv(const ThetaMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw InvalidInput("mat_inv needs a square matrix");
  const RingData* data = a(0, 0).ring();
  for (Eigen::Index r = 0; r < a.rows() && !data; ++r)
    for (Eigen::Index c = 0; c < a.cols() && !data; ++c) data = a(r, c).ring();
  if (!data) throw InvalidInput("mat_inv needs ring-bound entries");
  RingSpec spec;
  spec.family = data->family;
  spec.m = data->m;
  spec.d = data->d;
  spec.involution = data->involution;
  spec.lambda = {data->lambda[0], data->lambda[1]};
  spec.mu = {data->mu[0], data->mu[1]};
  const Ring ring = Ring::validate(spec);

  const RingElem det = ring.bind(determinant(a));
  auto det_inv = ring.unit_inverse(det);
  if (!det_inv) return std::nullopt;
  ThetaMatrix inv = adjugate(a);
  for (Eigen::Index r = 0; r < inv.rows(); ++r)
    for (Eigen::Index c = 0; c < inv.cols(); ++c) inv(r, c) = ring.bind(inv(r, c)) * *det_inv;
  const int n = theta_n(a);
  if (mat_mul(a, inv) != identity(ring, n)) {
    throw InternalCheckFailure("adjugate inverse failed its self-check");
  }
  return inv;
}

ThetaMatrix mat_inv_or_throw(const ThetaMatrix& a) {
  auto inv = mat_inv(a);
  if (!inv) throw NotInvertible("matrix determinant is not a unit");
  return *inv;
}

ThetaMatrix conjugate(const ThetaMatrix& h, const ThetaMatrix& g) {
  return mat_mul(mat_mul(h, g), mat_inv_or_throw(h));
}

ThetaMatrix commutator(const ThetaMatrix& a, const ThetaMatrix& b) {
  return mat_mul(mat_mul(mat_mul(a, b), mat_inv_or_throw(a)), mat_inv_or_throw(b));
}

bool is_identity(const ThetaMatrix& a) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != RingElem(r == c ? 1 : 0)) return false;
  return true;
}

}  // namespace oddgroup
