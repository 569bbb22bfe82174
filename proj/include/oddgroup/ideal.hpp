#pragma once

#include <functional>
#include <vector>

#include "oddgroup/ring.hpp"

namespace oddgroup {

// Subset of a finite ring stored as a bitmap over element codes.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(Ring ring);

  static ElemSet from_predicate(const Ring& ring, const std::function<bool(const RingElem&)>& pred);
  static ElemSet whole(const Ring& ring);

  const Ring& ring() const { return ring_; }
  bool contains(const RingElem& x) const;
  void insert(const RingElem& x);
  std::size_t size() const;
  // Members in code order.
  std::vector<RingElem> elements() const;
  bool subset_of(const ElemSet& other) const;
  bool operator==(const ElemSet& other) const { return bits_ == other.bits_; }

 private:
  Ring ring_;
  std::vector<bool> bits_;
};

// Ideal given by generators, with its enumerated closure.
struct Ideal {
  std::vector<RingElem> gens;
  ElemSet members;

  // Smallest ideal containing gens; with involution_closed also containing their conjugates.
  static Ideal generated(const Ring& ring, std::vector<RingElem> gens, bool involution_closed);
  static Ideal zero(const Ring& ring) { return generated(ring, {}, false); }
  static Ideal whole(const Ring& ring) { return generated(ring, {ring.one()}, false); }

  bool contains(const RingElem& x) const { return members.contains(x); }
  bool involution_invariant() const;
};

}  // namespace oddgroup
