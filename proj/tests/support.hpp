#pragma once

#include <random>
#include <string>

#include "oddgroup/context.hpp"
#include "oddgroup/ring.hpp"
#include "oddgroup/theta_matrix.hpp"

namespace testsupport {

using namespace oddgroup;

inline Ring zmod(int m) { return Ring::validate(Ring::parse_spec("zmod:" + std::to_string(m), "id")); }
inline Ring q3() { return Ring::validate(Ring::parse_spec("quadext:3:-1", "conj")); }

// Schoolbook product, independent of the Eigen path.
inline ThetaMatrix naive_product(const ThetaMatrix& a, const ThetaMatrix& b) {
  ThetaMatrix c = a;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index col = 0; col < b.cols(); ++col) {
      RingElem s = a(r, 0) * b(0, col);
      for (Eigen::Index t = 1; t < a.cols(); ++t) s = s + a(r, t) * b(t, col);
      c(r, col) = s;
    }
  return c;
}

inline ThetaColumn random_column(const Ring& R, int n, std::mt19937_64& rng) {
  ThetaColumn u = zero_column(R, n);
  for (Eigen::Index p = 0; p < u.size(); ++p) u(p) = R.random(rng);
  return u;
}

// Brute-force inverse by scanning the ring.
inline std::optional<RingElem> scan_inverse(const Ring& R, const RingElem& x) {
  for (const auto& y : R.elements())
    if (R.bind(x) * y == R.one()) return y;
  return std::nullopt;
}

}  // namespace testsupport
