#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "oddgroup/errors.hpp"

namespace oddgroup {

enum class RingFamily { Residue, Quadratic };
enum class Involution { Identity, Conjugation };

// Interned description of a finite commutative ring with involution and the
// Hermitian data (lambda, mu). Elements point at one of these.
struct RingData {
  RingFamily family;
  std::int64_t m;
  std::int64_t d;
  Involution involution;
  std::int64_t lambda[2];
  std::int64_t mu[2];
};

// Element of Z/m or (Z/m)[t]/(t^2 - d), stored as canonical residues a + b t.
//
// A default-constructed or int-constructed element carries no ring; such
// constants adopt the ring of the other operand. Eigen creates them through
// Scalar(0) and Scalar(1).
class RingElem {
 public:
  RingElem() = default;
  RingElem(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  RingElem(const RingData* ring, std::int64_t a, std::int64_t b);

  const RingData* ring() const { return ring_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  bool is_zero() const;
  RingElem bound_to(const RingData* ring) const;

  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

  friend RingElem operator+(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x, const RingElem& y);
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x);
  friend bool operator==(const RingElem& x, const RingElem& y);
  friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

 private:
  const RingData* ring_ = nullptr;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

// The involution x -> x-bar of the element's ring.
RingElem bar(const RingElem& x);

// a, or [a,b] over a quadratic extension.
std::ostream& operator<<(std::ostream& os, const RingElem& x);

struct RingSpec {
  RingFamily family = RingFamily::Residue;
  std::int64_t m = 2;
  std::int64_t d = 0;
  Involution involution = Involution::Identity;
  std::array<std::int64_t, 2> lambda{1, 0};
  std::array<std::int64_t, 2> mu{1, 0};
};

// Validated handle. Cheap to copy; the underlying data is interned for the
// lifetime of the process.
class Ring {
 public:
  Ring() = default;

  // Throws InvalidInput if any Hermitian-ring law fails.
  static Ring validate(const RingSpec& spec);

  // Parses "zmod:m" or "quadext:m:d" and "id"/"conj"; lambda/mu default to 1.
  static RingSpec parse_spec(const std::string& desc, const std::string& involution);

  const RingData* data() const { return data_; }
  const RingSpec& spec() const { return spec_; }
  bool operator==(const Ring& o) const { return data_ == o.data_; }
  bool operator!=(const Ring& o) const { return data_ != o.data_; }

  std::string description() const;
  std::string involution_name() const;

  RingElem zero() const { return RingElem(data_, 0, 0); }
  RingElem one() const { return RingElem(data_, 1, 0); }
  RingElem elem(std::int64_t a, std::int64_t b = 0) const { return RingElem(data_, a, b); }
  RingElem lambda() const { return RingElem(data_, data_->lambda[0], data_->lambda[1]); }
  RingElem mu() const { return RingElem(data_, data_->mu[0], data_->mu[1]); }
  RingElem bind(const RingElem& x) const { return x.bound_to(data_); }

  RingElem involution(const RingElem& x) const { return bar(bind(x)); }
  // lambda-bar * x-bar * lambda, the inverse of the involution.
  RingElem underbar(const RingElem& x) const;
  std::optional<RingElem> unit_inverse(const RingElem& x) const;
  RingElem lambda_power(int k) const;

  bool is_quadratic() const { return data_->family == RingFamily::Quadratic; }
  std::size_t size() const;
  std::size_t code(const RingElem& x) const;
  RingElem from_code(std::size_t c) const;
  std::vector<RingElem> elements() const;
  RingElem random(std::mt19937_64& rng) const;

 private:
  const RingData* data_ = nullptr;
  RingSpec spec_;
};

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace oddgroup

namespace Eigen {
template <>
struct NumTraits<oddgroup::RingElem> : GenericNumTraits<oddgroup::RingElem> {
  using Real = oddgroup::RingElem;
  using NonInteger = oddgroup::RingElem;
  using Literal = oddgroup::RingElem;
  using Nested = oddgroup::RingElem;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
