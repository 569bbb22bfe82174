#include "oddgroup/ring.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace oddgroup {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

const RingData* intern(const RingData& d) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<RingData>> table;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& p : table) {
    if (p->family == d.family && p->m == d.m && p->d == d.d && p->involution == d.involution &&
        p->lambda[0] == d.lambda[0] && p->lambda[1] == d.lambda[1] && p->mu[0] == d.mu[0] &&
        p->mu[1] == d.mu[1]) {
      return p.get();
    }
  }
  table.push_back(std::make_unique<RingData>(d));
  return table.back().get();
}

const RingData* common_ring(const RingElem& x, const RingElem& y) {
  if (x.ring() && y.ring() && x.ring() != y.ring()) {
    throw InvalidInput("ring mismatch between operands");
  }
  return x.ring() ? x.ring() : y.ring();
}

std::string elem_text(const RingElem& x) {
  std::ostringstream os;
  os << x.a();
  if (x.ring() && x.ring()->family == RingFamily::Quadratic) os << "+" << x.b() << "t";
  return os.str();
}

}  // namespace

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = reduce(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return reduce(s0, m);
}

RingElem::RingElem(const RingData* ring, std::int64_t a, std::int64_t b) : ring_(ring) {
  a_ = reduce(a, ring->m);
  b_ = ring->family == RingFamily::Quadratic ? reduce(b, ring->m) : 0;
}

bool RingElem::is_zero() const {
  if (!ring_) return a_ == 0 && b_ == 0;
  return a_ == 0 && b_ == 0;
}

RingElem RingElem::bound_to(const RingData* ring) const {
  if (ring_ == ring) return *this;
  if (ring_) throw InvalidInput("ring mismatch between operands");
  return RingElem(ring, a_, b_);
}

RingElem operator+(const RingElem& x, const RingElem& y) {
  const RingData* r = common_ring(x, y);
  if (!r) return RingElem(static_cast<int>(x.a_ + y.a_));
  RingElem u = x.bound_to(r), v = y.bound_to(r);
  RingElem out;
  out.ring_ = r;
  out.a_ = u.a_ + v.a_;
  if (out.a_ >= r->m) out.a_ -= r->m;
  out.b_ = u.b_ + v.b_;
  if (out.b_ >= r->m) out.b_ -= r->m;
  return out;
}

RingElem operator-(const RingElem& x, const RingElem& y) {
  const RingData* r = common_ring(x, y);
  if (!r) return RingElem(static_cast<int>(x.a_ - y.a_));
  RingElem u = x.bound_to(r), v = y.bound_to(r);
  RingElem out;
  out.ring_ = r;
  out.a_ = u.a_ - v.a_;
  if (out.a_ < 0) out.a_ += r->m;
  out.b_ = u.b_ - v.b_;
  if (out.b_ < 0) out.b_ += r->m;
  return out;
}

RingElem operator*(const RingElem& x, const RingElem& y) {
  const RingData* r = common_ring(x, y);
  if (!r) return RingElem(static_cast<int>(x.a_ * y.a_));
  RingElem u = x.bound_to(r), v = y.bound_to(r);
  RingElem out;
  out.ring_ = r;
  const std::int64_t m = r->m;
  if (r->family == RingFamily::Residue) {
    out.a_ = (u.a_ * v.a_) % m;
    out.b_ = 0;
  } else {
    out.a_ = ((u.a_ * v.a_) % m + r->d * ((u.b_ * v.b_) % m)) % m;
    out.b_ = ((u.a_ * v.b_) % m + (u.b_ * v.a_) % m) % m;
  }
  return out;
}

RingElem operator-(const RingElem& x) {
  if (!x.ring_) return RingElem(static_cast<int>(-x.a_));
  RingElem out = x;
  out.a_ = x.a_ ? x.ring_->m - x.a_ : 0;
  out.b_ = x.b_ ? x.ring_->m - x.b_ : 0;
  return out;
}

bool operator==(const RingElem& x, const RingElem& y) {
  if (x.ring_ && y.ring_ && x.ring_ != y.ring_) return false;
  const RingData* r = x.ring_ ? x.ring_ : y.ring_;
  if (!r) return x.a_ == y.a_ && x.b_ == y.b_;
  RingElem u = x.bound_to(r), v = y.bound_to(r);
  return u.a_ == v.a_ && u.b_ == v.b_;
}

RingElem bar(const RingElem& x) {
  if (!x.ring() || x.ring()->involution == Involution::Identity) return x;
  return RingElem(x.ring(), x.a(), -x.b());
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) {
  if (x.ring() && x.ring()->family == RingFamily::Quadratic) return os << '[' << x.a() << ',' << x.b() << ']';
  return os << x.a();
}

RingSpec Ring::parse_spec(const std::string& desc, const std::string& involution) {
  RingSpec spec;
  std::vector<std::string> parts;
  std::stringstream ss(desc);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 2 && parts[0] == "zmod") {
      spec.family = RingFamily::Residue;
      spec.m = std::stoll(parts[1]);
    } else if (parts.size() == 3 && parts[0] == "quadext") {
      spec.family = RingFamily::Quadratic;
      spec.m = std::stoll(parts[1]);
      spec.d = std::stoll(parts[2]);
    } else {
      throw InvalidInput("ring description must be zmod:m or quadext:m:d, got '" + desc + "'");
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed ring description '" + desc + "'");
  }
  if (involution.empty()) {
    spec.involution =
        spec.family == RingFamily::Quadratic ? Involution::Conjugation : Involution::Identity;
  } else if (involution == "id") {
    spec.involution = Involution::Identity;
  } else if (involution == "conj") {
    spec.involution = Involution::Conjugation;
  } else {
    throw InvalidInput("involution must be id or conj, got '" + involution + "'");
  }
  return spec;
}

Ring Ring::validate(const RingSpec& in) {
  if (in.m < 2 || in.m >= (std::int64_t{1} << 31)) {
    throw InvalidInput("modulus must satisfy 2 <= m < 2^31");
  }
  if (in.family == RingFamily::Residue && in.involution == Involution::Conjugation) {
    throw InvalidInput("the involution t -> -t needs a quadratic extension");
  }
  RingSpec spec = in;
  const bool quad = spec.family == RingFamily::Quadratic;
  spec.d = quad ? reduce(spec.d, spec.m) : 0;
  for (auto* p : {&spec.lambda, &spec.mu}) {
    (*p)[0] = reduce((*p)[0], spec.m);
    (*p)[1] = quad ? reduce((*p)[1], spec.m) : 0;
  }
  RingData data{spec.family, spec.m, spec.d, spec.involution,
                {spec.lambda[0], spec.lambda[1]}, {spec.mu[0], spec.mu[1]}};
  Ring ring;
  ring.data_ = intern(data);
  ring.spec_ = spec;

  const RingElem lam = ring.lambda();
  auto lam_inv = ring.unit_inverse(lam);
  if (!lam_inv) throw InvalidInput("lambda " + elem_text(lam) + " is not a unit");
  if (bar(lam) != *lam_inv) {
    throw InvalidInput("lambda-bar " + elem_text(bar(lam)) + " differs from lambda^-1 " +
                       elem_text(*lam_inv));
  }
  auto check_symmetry = [&](const RingElem& x) {
    if (bar(bar(x)) != lam * x * bar(lam)) {
      throw InvalidInput("involution law fails at x = " + elem_text(x));
    }
  };
  if (ring.size() <= 4096) {
    for (const auto& x : ring.elements()) check_symmetry(x);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 50; ++t) check_symmetry(ring.random(rng));
  }
  const RingElem mu = ring.mu();
  if (mu != bar(mu) * lam) throw InvalidInput("mu does not satisfy mu = mu-bar * lambda");
  return ring;
}

std::string Ring::description() const {
  std::ostringstream os;
  if (is_quadratic()) {
    os << "quadext:" << data_->m << ":" << data_->d;
  } else {
    os << "zmod:" << data_->m;
  }
  return os.str();
}

std::string Ring::involution_name() const {
  return data_->involution == Involution::Identity ? "id" : "conj";
}

RingElem Ring::underbar(const RingElem& x) const {
  const RingElem lam = lambda();
  return bar(lam) * bar(bind(x)) * lam;
}

std::optional<RingElem> Ring::unit_inverse(const RingElem& x0) const {
  const RingElem x = bind(x0);
  const std::int64_t m = data_->m;
  if (!is_quadratic()) {
    auto inv = inverse_mod(x.a(), m);
    if (!inv) return std::nullopt;
    return elem(*inv);
  }
  // Norm of a + bt is the determinant of its 2x2 regular representation.
  std::int64_t norm = reduce((x.a() * x.a()) % m - (data_->d * ((x.b() * x.b()) % m)) % m, m);
  auto inv = inverse_mod(norm, m);
  if (!inv) return std::nullopt;
  return elem((x.a() * *inv) % m, (-x.b() % m) * *inv % m);
}

RingElem Ring::lambda_power(int k) const {
  RingElem base = k >= 0 ? lambda() : *unit_inverse(lambda());
  RingElem out = one();
  for (int t = 0; t < (k >= 0 ? k : -k); ++t) out = out * base;
  return out;
}

std::size_t Ring::size() const {
  const auto m = static_cast<std::size_t>(data_->m);
  return is_quadratic() ? m * m : m;
}

std::size_t Ring::code(const RingElem& x0) const {
  const RingElem x = bind(x0);
  return static_cast<std::size_t>(x.a() + data_->m * x.b());
}

RingElem Ring::from_code(std::size_t c) const {
  const auto m = static_cast<std::size_t>(data_->m);
  return elem(static_cast<std::int64_t>(c % m), static_cast<std::int64_t>(c / m));
}

std::vector<RingElem> Ring::elements() const {
  std::vector<RingElem> out;
  out.reserve(size());
  for (std::size_t c = 0; c < size(); ++c) out.push_back(from_code(c));
  return out;
}

RingElem Ring::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> dist(0, size() - 1);
  return from_code(dist(rng));
}

}  // namespace oddgroup
