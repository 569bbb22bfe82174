#include "oddgroup/context.hpp"

#include "oddgroup/decomp_engine.hpp"
#include "oddgroup/ortho_decomp.hpp"

namespace oddgroup {

GroupContext make_group(const std::string& group_tag, const Ring& ring, int n,
                        const std::optional<OddFormParam>& delta) {
  GroupContext ctx;
  if (group_tag == "ortho") {
    if (ring.data()->involution != Involution::Identity)
      throw InvalidInput("the orthogonal group needs the trivial involution");
    ctx.ortho = std::make_shared<const OrthoGroup>(ring, n);
    ctx.group = ctx.ortho;
  } else if (group_tag == "unitary") {
    if (!delta) throw InvalidInput("the unitary group needs an odd form parameter");
    ctx.unitary = std::make_shared<const UnitaryGroup>(ring, n, *delta);
    ctx.group = ctx.unitary;
  } else {
    throw InvalidInput("group must be ortho or unitary, got '" + group_tag + "'");
  }
  return ctx;
}

GroupContext standard_group(const std::string& name, int n) {
  if (name.rfind("ortho-z", 0) == 0) {
    const Ring R = Ring::validate(Ring::parse_spec("zmod:" + name.substr(7), "id"));
    return make_group("ortho", R, n, std::nullopt);
  }
  if (name == "unitary-z3max") {
    const Ring R = Ring::validate(Ring::parse_spec("zmod:3", "id"));
    return make_group("unitary", R, n, OddFormParam::maximal(R));
  }
  if (name == "unitary-q3min") {
    const Ring R = Ring::validate(Ring::parse_spec("quadext:3:-1", "conj"));
    return make_group("unitary", R, n, OddFormParam::closure(R, {}));
  }
  throw InvalidInput("unknown configuration '" + name + "'");
}

bool kind_takes_a(const ClassicalGroup& group, int kind) {
  return group.kind() == GroupKind::Unitary && (kind == 3 || kind == 4 || kind == 8);
}

Certificate decompose(const GroupContext& ctx, const ThetaMatrix& sigma, int kind, const CertIndices& idx,
                      const std::optional<RingElem>& a, DecompStats* stats) {
  if (ctx.ortho) {
    if (a) throw InvalidInput("orthogonal certificates take no parameter a");
    return decompose_ortho(ctx.ortho, sigma, kind, idx);
  }
  if (ctx.unitary) return decompose_unitary(ctx.unitary, sigma, kind, idx, a, stats);
  throw InvalidInput("no group");
}

CertIndices random_source(const ClassicalGroup& group, int kind, int k, int l, std::mt19937_64& rng) {
  const auto& hb = group.theta_hb();
  std::uniform_int_distribution<std::size_t> pick(0, hb.size() - 1);
  for (;;) {
    CertIndices idx{0, 0, k, l};
    if (kind >= 7) {
      idx.j = hb[pick(rng)];
    } else {
      idx.i = hb[pick(rng)];
      idx.j = hb[pick(rng)];
      if (idx.i == idx.j || idx.i == -idx.j) continue;
      if (kind == 2 || kind == 3 || kind == 6) idx.j = 0;
      if (kind == 4) idx.i = 0;
    }
    idx = with_default_aux(group, kind, idx);
    check_indices(group, kind, idx);
    return idx;
  }
}

std::vector<CertIndices> target_sweep(const ClassicalGroup& group, int kind, std::mt19937_64& rng) {
  std::vector<CertIndices> out;
  for (int k : group.theta_hb()) {
    if (kind >= 7) {
      out.push_back(random_source(group, kind, k, 0, rng));
      continue;
    }
    for (int l : group.theta_hb())
      if (l != k && l != -k) out.push_back(random_source(group, kind, k, l, rng));
  }
  return out;
}

CertIndices random_indices(const ClassicalGroup& group, int kind, std::mt19937_64& rng) {
  const auto& hb = group.theta_hb();
  std::uniform_int_distribution<std::size_t> pick(0, hb.size() - 1);
  const int k = hb[pick(rng)];
  if (kind >= 7) return random_source(group, kind, k, 0, rng);
  int l = k;
  while (l == k || l == -k) l = hb[pick(rng)];
  return random_source(group, kind, k, l, rng);
}

std::optional<RingElem> random_a(const GroupContext& ctx, int kind, std::mt19937_64& rng) {
  if (!ctx.group || !kind_takes_a(*ctx.group, kind)) return std::nullopt;
  const auto js = ctx.unitary->delta().first_components().elements();
  std::uniform_int_distribution<std::size_t> pick(0, js.size() - 1);
  return js[pick(rng)];
}

}  // namespace oddgroup
