#include "oddgroup/ideal.hpp"

namespace oddgroup {

ElemSet::ElemSet(Ring ring) : ring_(std::move(ring)), bits_(ring_.size(), false) {}

ElemSet ElemSet::from_predicate(const Ring& ring,
                                const std::function<bool(const RingElem&)>& pred) {
  ElemSet out(ring);
  for (std::size_t c = 0; c < ring.size(); ++c) out.bits_[c] = pred(ring.from_code(c));
  return out;
}

ElemSet ElemSet::whole(const Ring& ring) {
  ElemSet out(ring);
  out.bits_.assign(ring.size(), true);
  return out;
}

bool ElemSet::contains(const RingElem& x) const { return bits_[ring_.code(x)]; }

void ElemSet::insert(const RingElem& x) { bits_[ring_.code(x)] = true; }

std::size_t ElemSet::size() const {
  std::size_t count = 0;
  for (bool b : bits_) count += b ? 1 : 0;
  return count;
}

std::vector<RingElem> ElemSet::elements() const {
  std::vector<RingElem> out;
  for (std::size_t c = 0; c < bits_.size(); ++c)
    if (bits_[c]) out.push_back(ring_.from_code(c));
  return out;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  for (std::size_t c = 0; c < bits_.size(); ++c)
    if (bits_[c] && !other.bits_[c]) return false;
  return true;
}

Ideal Ideal::generated(const Ring& ring, std::vector<RingElem> gens, bool involution_closed) {
  for (auto& g : gens) g = ring.bind(g);
  std::vector<RingElem> all = gens;
  if (involution_closed)
    for (const auto& g : gens) all.push_back(bar(g));

  // Sum of principal ideals, one generator at a time.
  ElemSet acc(ring);
  acc.insert(ring.zero());
  const auto elems = ring.elements();
  for (const auto& g : all) {
    ElemSet principal(ring);
    for (const auto& r : elems) principal.insert(r * g);
    const auto left = acc.elements();
    const auto right = principal.elements();
    ElemSet next(ring);
    for (const auto& a : left)
      for (const auto& b : right) next.insert(a + b);
    acc = next;
  }
  return Ideal{std::move(gens), std::move(acc)};
}

bool Ideal::involution_invariant() const {
  for (const auto& x : members.elements())
    if (!members.contains(bar(x))) return false;
  return true;
}

}  // namespace oddgroup
