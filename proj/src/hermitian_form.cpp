#include "oddgroup/hermitian_form.hpp"

#include <algorithm>
#include <deque>

namespace oddgroup {

namespace {

constexpr std::size_t kMaxEnumeratedRing = 2048;

RingElem mu_for(const Ring& ring, int sign) { return sign > 0 ? ring.mu() : bar(ring.mu()); }

HeisElem bound(const Ring& ring, const HeisElem& h) { return {ring.bind(h.x), ring.bind(h.y)}; }

}  // namespace

HeisElem heis_add(const Ring& ring, const HeisElem& a0, const HeisElem& b0, int sign) {
  const HeisElem a = bound(ring, a0), b = bound(ring, b0);
  return {a.x + b.x, a.y + b.y - bar(a.x) * mu_for(ring, sign) * b.x};
}

HeisElem heis_neg(const Ring& ring, const HeisElem& a0, int sign) {
  const HeisElem a = bound(ring, a0);
  return {-a.x, -a.y - bar(a.x) * mu_for(ring, sign) * a.x};
}

HeisElem heis_scale(const HeisElem& h, const RingElem& a) { return {h.x * a, bar(a) * h.y * a}; }

RingElem trace(const Ring& ring, const HeisElem& h0) {
  const HeisElem h = bound(ring, h0);
  return bar(h.x) * ring.mu() * h.x + h.y + bar(h.y) * ring.lambda();
}

std::string delta_kind_name(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::Min:
      return "min";
    case DeltaKind::Max:
      return "max";
    case DeltaKind::Set:
      return "set";
  }
  return "set";
}

bool delta_bounds_member(const Ring& ring, const HeisElem& h0, DeltaKind which) {
  const HeisElem h = bound(ring, h0);
  if (which == DeltaKind::Max) return trace(ring, h).is_zero();
  if (which != DeltaKind::Min) throw InvalidInput("delta_bounds_member needs min or max");
  if (!h.x.is_zero()) return false;
  for (const auto& x : ring.elements())
    if (x - bar(x) * ring.lambda() == h.y) return true;
  return false;
}

HeisSet::HeisSet(Ring ring) : ring_(std::move(ring)) {
  const std::size_t s = ring_.size();
  if (s > kMaxEnumeratedRing) {
    throw InvalidInput("odd form parameters need a ring of at most 2048 elements");
  }
  bits_.assign(s * s, false);
}

std::size_t HeisSet::index(const HeisElem& h) const {
  return ring_.code(h.x) * ring_.size() + ring_.code(h.y);
}

bool HeisSet::contains(const HeisElem& h) const { return bits_[index(h)]; }

void HeisSet::insert(const HeisElem& h) { bits_[index(h)] = true; }

std::size_t HeisSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<HeisElem> HeisSet::elements() const {
  std::vector<HeisElem> out;
  const std::size_t s = ring_.size();
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) out.push_back({ring_.from_code(k / s), ring_.from_code(k % s)});
  return out;
}

bool HeisSet::subset_of(const HeisSet& other) const {
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !other.bits_[k]) return false;
  return true;
}

HeisSet HeisSet::mirrored() const {
  HeisSet out(ring_);
  for (const auto& h : elements()) out.insert({h.x, bar(h.y)});
  return out;
}

HeisSet heis_closure(const Ring& ring, const std::vector<HeisElem>& seeds, bool with_scaling,
                     int sign) {
  HeisSet set(ring);
  std::vector<HeisElem> members;
  std::deque<HeisElem> pending;
  auto push = [&](const HeisElem& h) {
    if (set.contains(h)) return;
    set.insert(h);
    pending.push_back(h);
  };
  push({ring.zero(), ring.zero()});
  for (const auto& s : seeds) push(bound(ring, s));
  const auto scalars = with_scaling ? ring.elements() : std::vector<RingElem>{};
  while (!pending.empty()) {
    const HeisElem h = pending.front();
    pending.pop_front();
    members.push_back(h);
    push(heis_neg(ring, h, sign));
    for (const auto& a : scalars) push(heis_scale(h, a));
    const std::size_t count = members.size();
    for (std::size_t t = 0; t < count; ++t) {
      push(heis_add(ring, h, members[t], sign));
      push(heis_add(ring, members[t], h, sign));
    }
  }
  return set;
}

bool heis_is_module(const HeisSet& set, int sign) {
  const Ring& ring = set.ring();
  const auto elems = set.elements();
  const auto scalars = ring.elements();
  for (const auto& h : elems) {
    if (!set.contains(heis_neg(ring, h, sign))) return false;
    for (const auto& a : scalars)
      if (!set.contains(heis_scale(h, a))) return false;
    for (const auto& g : elems)
      if (!set.contains(heis_add(ring, h, g, sign))) return false;
  }
  return true;
}

OddFormParam OddFormParam::minimal(const Ring& ring) {
  OddFormParam out;
  out.kind_ = DeltaKind::Min;
  out.set_ = HeisSet(ring);
  for (const auto& x : ring.elements()) out.set_.insert({ring.zero(), x - bar(x) * ring.lambda()});
  out.fill_cache();
  return out;
}

OddFormParam OddFormParam::maximal(const Ring& ring) {
  OddFormParam out;
  out.kind_ = DeltaKind::Max;
  out.set_ = HeisSet(ring);
  const auto elems = ring.elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (trace(ring, {x, y}).is_zero()) out.set_.insert({x, y});
  out.fill_cache();
  return out;
}

OddFormParam OddFormParam::closure(const Ring& ring, const std::vector<HeisElem>& gens) {
  std::vector<HeisElem> seeds = minimal(ring).set_.elements();
  for (const auto& g : gens) {
    if (!trace(ring, g).is_zero()) throw InvalidInput("generator lies outside Delta_max");
    seeds.push_back(bound(ring, g));
  }
  OddFormParam out;
  out.kind_ = DeltaKind::Set;
  out.set_ = heis_closure(ring, seeds, true);
  if (!out.set_.subset_of(maximal(ring).set_)) {
    throw InternalCheckFailure("closure escaped Delta_max");
  }
  out.fill_cache();
  return out;
}

OddFormParam OddFormParam::from_elements(const Ring& ring, const std::vector<HeisElem>& elems) {
  OddFormParam out;
  out.kind_ = DeltaKind::Set;
  out.set_ = HeisSet(ring);
  for (const auto& h : elems) out.set_.insert(bound(ring, h));
  if (!minimal(ring).set_.subset_of(out.set_)) throw InvalidInput("set does not contain Delta_min");
  if (!out.set_.subset_of(maximal(ring).set_)) throw InvalidInput("set is not inside Delta_max");
  if (!heis_is_module(out.set_)) throw InvalidInput("set is not closed under add, neg and scaling");
  out.fill_cache();
  return out;
}

OddFormParam OddFormParam::mirror() const {
  OddFormParam out = *this;
  out.mirrored_ = !mirrored_;
  std::swap(out.cache_plus_, out.cache_minus_);
  return out;
}

bool OddFormParam::contains(const HeisElem& h, int sign) const {
  const int s = mirrored_ ? -sign : sign;
  const HeisElem b = bound(ring(), h);
  return s > 0 ? set_.contains(b) : set_.contains({b.x, bar(b.y)});
}

std::vector<HeisElem> OddFormParam::elements(int sign) const {
  return sign > 0 ? cache_plus_ : cache_minus_;
}

void OddFormParam::fill_cache() {
  const auto base = set_.elements();
  const auto flipped = set_.mirrored().elements();
  cache_plus_ = mirrored_ ? flipped : base;
  cache_minus_ = mirrored_ ? base : flipped;
}

ElemSet OddFormParam::first_components() const {
  ElemSet out(ring());
  for (const auto& h : cache_plus_) out.insert(h.x);
  return out;
}

std::optional<RingElem> OddFormParam::complete(const RingElem& a, int sign) const {
  for (const auto& b : ring().elements())
    if (contains({a, b}, sign)) return b;
  return std::nullopt;
}

HeisElem OddFormParam::random(std::mt19937_64& rng, int sign) const {
  const auto& pool = sign > 0 ? cache_plus_ : cache_minus_;
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

FormIdealSets form_ideal_derived(const Ideal& ideal, const OddFormParam& delta) {
  const Ring& ring = delta.ring();
  if (!ideal.involution_invariant()) throw InvalidInput("ideal is not involution invariant");
  FormIdealSets out;
  out.j_delta = delta.first_components();
  const auto js = out.j_delta.elements();
  const RingElem mu = ring.mu();
  out.i_tilde = ElemSet::from_predicate(ring, [&](const RingElem& x) {
    return std::all_of(js.begin(), js.end(),
                       [&](const RingElem& y) { return ideal.contains(bar(y) * mu * x); });
  });
  out.i_zero = ElemSet::from_predicate(ring, [&](const RingElem& x) {
    return std::all_of(js.begin(), js.end(),
                       [&](const RingElem& y) { return ideal.contains(x * y); });
  });
  out.i_zero_tilde = ElemSet::from_predicate(ring, [&](const RingElem& x) {
    return std::all_of(js.begin(), js.end(),
                       [&](const RingElem& y) { return out.i_zero.contains(bar(y) * mu * x); });
  });

  std::vector<HeisElem> seeds;
  const auto is = ideal.members.elements();
  for (const auto& x : is) seeds.push_back({ring.zero(), x - bar(x) * ring.lambda()});
  for (const auto& h : delta.elements())
    for (const auto& a : is) seeds.push_back(heis_scale(h, a));
  out.omega_min = heis_closure(ring, seeds, false);

  out.omega_max = HeisSet(ring);
  for (const auto& h : delta.elements())
    if (out.i_tilde.contains(h.x) && ideal.contains(h.y)) out.omega_max.insert(h);
  return out;
}

bool OddFormIdeal::contains(const HeisElem& h, int sign) const {
  const Ring& ring = omega.ring();
  const HeisElem b = bound(ring, h);
  return sign > 0 ? omega.contains(b) : omega.contains({b.x, bar(b.y)});
}

OddFormIdeal OddFormIdeal::validated(const Ideal& ideal, const HeisSet& omega,
                                     const OddFormParam& delta) {
  const auto sets = form_ideal_derived(ideal, delta);
  if (!sets.omega_min.subset_of(omega)) throw InvalidInput("Omega does not contain Omega_min");
  if (!omega.subset_of(sets.omega_max)) throw InvalidInput("Omega is not inside Omega_max");
  if (!heis_is_module(omega)) throw InvalidInput("Omega is not closed under add, neg and scaling");
  return OddFormIdeal{ideal, omega};
}

ScaleSumSides scale_sum_expand(const Ring& ring, const HeisElem& h0, const std::vector<RingElem>& xs0) {
  const HeisElem h = bound(ring, h0);
  if (!trace(ring, h).is_zero()) throw InvalidInput("scale_sum_expand needs h in Delta_max");
  std::vector<RingElem> xs;
  for (const auto& x : xs0) xs.push_back(ring.bind(x));
  RingElem total = ring.zero();
  for (const auto& x : xs) total += x;
  ScaleSumSides out;
  out.lhs = heis_scale(h, total);
  HeisElem acc{ring.zero(), ring.zero()};
  for (const auto& x : xs) acc = heis_add(ring, acc, heis_scale(h, x));
  RingElem corr = ring.zero();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const RingElem c = bar(xs[i]) * h.y * xs[j];
      corr += c - bar(c) * ring.lambda();
    }
  }
  out.rhs = heis_add(ring, acc, {ring.zero(), corr});
  return out;
}

}  // namespace oddgroup
