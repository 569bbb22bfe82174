#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oddgroup/ideal.hpp"
#include "oddgroup/ring.hpp"

namespace oddgroup {

// Element (x, y) of the Heisenberg group on R x R.
struct HeisElem {
  RingElem x;
  RingElem y;
  friend bool operator==(const HeisElem& a, const HeisElem& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const HeisElem& a, const HeisElem& b) { return !(a == b); }
};

// sign = +1 uses (bar, lambda, mu); sign = -1 the mirrored ring (underbar, lambda-bar, mu-bar).
HeisElem heis_add(const Ring& ring, const HeisElem& a, const HeisElem& b, int sign = 1);
HeisElem heis_neg(const Ring& ring, const HeisElem& a, int sign = 1);
// (x, y) o a = (xa, a-bar y a).
HeisElem heis_scale(const HeisElem& h, const RingElem& a);
RingElem trace(const Ring& ring, const HeisElem& h);

enum class DeltaKind { Min, Max, Set };
std::string delta_kind_name(DeltaKind kind);

bool delta_bounds_member(const Ring& ring, const HeisElem& h, DeltaKind which);

// Subset of R x R as a bitmap indexed by (code(x), code(y)).
class HeisSet {
 public:
  HeisSet() = default;
  explicit HeisSet(Ring ring);

  const Ring& ring() const { return ring_; }
  bool contains(const HeisElem& h) const;
  void insert(const HeisElem& h);
  std::size_t size() const;
  // Sorted by (code(x), code(y)).
  std::vector<HeisElem> elements() const;
  bool subset_of(const HeisSet& other) const;
  bool operator==(const HeisSet& other) const { return bits_ == other.bits_; }
  // {(x, y) | (x, y-bar) in this set}.
  HeisSet mirrored() const;

 private:
  std::size_t index(const HeisElem& h) const;
  Ring ring_;
  std::vector<bool> bits_;
};

// Closure of seeds under the group law of the given sign, optionally also under o.
HeisSet heis_closure(const Ring& ring, const std::vector<HeisElem>& seeds, bool with_scaling,
                     int sign = 1);

// True when the set is closed under add, neg and o for the given sign.
bool heis_is_module(const HeisSet& set, int sign = 1);

// Odd form parameter over a finite ring, or its mirror Delta^{-1}.
class OddFormParam {
 public:
  OddFormParam() = default;

  static OddFormParam minimal(const Ring& ring);
  static OddFormParam maximal(const Ring& ring);
  // Smallest parameter containing gens; rejects generators outside Delta_max.
  static OddFormParam closure(const Ring& ring, const std::vector<HeisElem>& gens);
  // Explicit set; rejects anything that is not a closed set between Delta_min and Delta_max.
  static OddFormParam from_elements(const Ring& ring, const std::vector<HeisElem>& elems);

  const Ring& ring() const { return set_.ring(); }
  DeltaKind kind() const { return kind_; }
  bool is_mirrored() const { return mirrored_; }
  OddFormParam mirror() const;

  // Membership in Delta^sign (relative to this object's own orientation).
  bool contains(const HeisElem& h, int sign = 1) const;
  std::vector<HeisElem> elements(int sign = 1) const;
  const HeisSet& base_set() const { return set_; }

  // J(Delta): first components.
  ElemSet first_components() const;
  // First b in code order with (a, b) in Delta^sign.
  std::optional<RingElem> complete(const RingElem& a, int sign) const;
  HeisElem random(std::mt19937_64& rng, int sign) const;

  bool operator==(const OddFormParam& o) const {
    return set_ == o.set_ && mirrored_ == o.mirrored_;
  }

 private:
  DeltaKind kind_ = DeltaKind::Min;
  bool mirrored_ = false;
  HeisSet set_;
  std::vector<HeisElem> cache_plus_;
  std::vector<HeisElem> cache_minus_;
  void fill_cache();
};

// Sets attached to an involution-invariant ideal I of (R, Delta).
struct FormIdealSets {
  ElemSet j_delta;
  ElemSet i_tilde;
  ElemSet i_zero;
  ElemSet i_zero_tilde;
  HeisSet omega_min;
  HeisSet omega_max;
};

FormIdealSets form_ideal_derived(const Ideal& ideal, const OddFormParam& delta);

// Odd form ideal (I, Omega) with Omega stored unmirrored.
struct OddFormIdeal {
  Ideal ideal;
  HeisSet omega;

  // Omega^sign membership.
  bool contains(const HeisElem& h, int sign = 1) const;
  // Checks Omega_min <= Omega <= Omega_max and the module laws.
  static OddFormIdeal validated(const Ideal& ideal, const HeisSet& omega, const OddFormParam& delta);
};

struct ScaleSumSides {
  HeisElem lhs;
  HeisElem rhs;
};

// (a,b) o sum x_i against (add_i (a,b) o x_i) add (0, sum_{i>j} c_ij - c_ij-bar lambda)
// with c_ij = x_i-bar b x_j; the sum of terms runs in list order.
ScaleSumSides scale_sum_expand(const Ring& ring, const HeisElem& h, const std::vector<RingElem>& xs);

}  // namespace oddgroup
