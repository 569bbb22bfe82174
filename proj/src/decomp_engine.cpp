#include "oddgroup/decomp_engine.hpp"

#include <deque>
#include <string>

namespace oddgroup {

Atoms scaled(const Atoms& atoms, const RingElem& factor) {
  Atoms out = atoms;
  for (auto& a : out) a.coef = a.coef * factor;
  return out;
}

Atoms concat(Atoms a, const Atoms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

CertIndices with_default_aux(const ClassicalGroup& group, int kind, CertIndices idx) {
  auto first_outside = [&](int k) {
    for (int c : group.theta_hb())
      if (c != k && c != -k) return c;
    throw InvalidInput("no auxiliary index available");
  };
  if ((kind == 2 || kind == 3 || kind == 6) && idx.j == 0 && idx.i != 0) idx.j = first_outside(idx.i);
  if (kind == 4 && idx.i == 0 && idx.j != 0) idx.i = first_outside(idx.j);
  return idx;
}

DecompEngine::DecompEngine(const ClassicalGroup& group) : group_(group), root_(group.identity()) {}

RingElem DecompEngine::inv_unit(const RingElem& x) const {
  auto inv = ring().unit_inverse(x);
  if (!inv) throw InternalCheckFailure("expected a unit");
  return *inv;
}

WordPtr DecompEngine::word(std::initializer_list<ElemGen> gens) const {
  Word w;
  for (const auto& g : gens) w.push_back(group_.checked(g));
  return make_word(std::move(w));
}

WordPtr DecompEngine::word_inverse(const WordPtr& w) const {
  if (!w) return nullptr;
  return make_word(group_.inverse(*w));
}

WordPtr DecompEngine::concat_words(const WordPtr& a, const WordPtr& b) const {
  if (!a) return b;
  if (!b) return a;
  Word w = *a;
  w.insert(w.end(), b->begin(), b->end());
  return make_word(std::move(w));
}

WordPtr DecompEngine::p_word(int i, int j) const { return make_word(group_.p_word(i, j)); }

Atom DecompEngine::atom(IndexPair ab, const RingElem& coef, WordPtr conj, bool cj) const {
  return Atom{std::move(conj), ab.first, ab.second, ring().bind(coef), cj};
}

WordPtr DecompEngine::relocation(IndexPair src, IndexPair dst) const {
  const auto key = std::make_tuple(src.first, src.second, dst.first, dst.second);
  auto hit = reloc_cache_.find(key);
  if (hit != reloc_cache_.end()) return hit->second;

  const Ring& R = ring();
  const auto& hb = group_.theta_hb();
  // Monomial action of each P_pq: index a goes to perm(a) with multiplier.
  struct Move {
    IndexPair pq;
    std::map<int, std::pair<int, RingElem>> act;
  };
  std::vector<Move> moves;
  for (int p : hb) {
    for (int q : hb) {
      if (p == q || p == -q) continue;
      const ThetaMatrix m = group_.p_matrix(p, q);
      Move mv{{p, q}, {}};
      for (int a : hb)
        for (int r : hb)
          if (!R.bind(at(m, r, a)).is_zero()) mv.act[a] = {r, R.bind(at(m, r, a))};
      moves.push_back(std::move(mv));
    }
  }
  using State = std::tuple<int, int, std::size_t>;
  std::map<State, std::pair<State, int>> prev;
  const State start{src.first, src.second, R.code(R.one())};
  const State goal{dst.first, dst.second, R.code(R.one())};
  prev.emplace(start, std::make_pair(start, -1));
  std::deque<State> queue{start};
  while (!queue.empty() && !prev.count(goal)) {
    const State st = queue.front();
    queue.pop_front();
    const auto [a, b, c] = st;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      const auto& [pa, ca] = moves[m].act.at(a);
      const auto& [pb, cb] = moves[m].act.at(b);
      const RingElem c2 = R.from_code(c) * ca * inv_unit(cb);
      const State nx{pa, pb, R.code(c2)};
      if (prev.emplace(nx, std::make_pair(st, static_cast<int>(m))).second) queue.push_back(nx);
    }
  }
  if (!prev.count(goal)) {
    throw InternalCheckFailure("no exact relocation from (" + std::to_string(src.first) + "," +
                               std::to_string(src.second) + ") to (" + std::to_string(dst.first) + "," +
                               std::to_string(dst.second) + ")");
  }
  // Moves recorded from the goal backwards give the outermost factor first.
  Word w;
  for (State st = goal; st != start;) {
    const auto& [from, m] = prev.at(st);
    const Word pw = group_.p_word(moves[static_cast<std::size_t>(m)].pq.first,
                                  moves[static_cast<std::size_t>(m)].pq.second);
    w.insert(w.end(), pw.begin(), pw.end());
    st = from;
  }
  WordPtr result = w.empty() ? nullptr : make_word(std::move(w));

  for (const RingElem& x : {R.one(), R.from_code(R.size() - 1)}) {
    ThetaMatrix m = group_.matrix(group_.short_root(src.first, src.second, x));
    if (result) group_.conjugate_by(m, *result);
    if (m != group_.matrix(group_.short_root(dst.first, dst.second, x))) {
      throw InternalCheckFailure("relocation word does not map T_src(x) to T_dst(x)");
    }
  }
  reloc_cache_.emplace(key, result);
  return result;
}

WordPtr DecompEngine::ext_reloc(int i, int k) const {
  if (i == k) return nullptr;
  if (k != -i) return p_word(-k, -i);
  const int c = aux_index(i);
  return concat_words(p_word(-k, -c), p_word(-c, -i));
}

DecompEngine::Pivot DecompEngine::pivot(int j) const {
  if (j == 1) return {nullptr, 0};
  if (j != -1) return {p_word(1, j), 1};
  return {concat_words(p_word(1, 2), p_word(2, -1)), 2};
}

int DecompEngine::aux_index(int k, int sign) const {
  for (int c : group_.theta_hb())
    if (c != k && c != -k && (sign == 0 || eps(c) == sign)) return c;
  throw InternalCheckFailure("no auxiliary index");
}

RingElem DecompEngine::atom_value(const SigmaView& s, const Atoms& atoms) const {
  const Ring& R = ring();
  RingElem r = R.zero();
  for (const auto& a : atoms) {
    ThetaMatrix m = s.m;
    if (a.conj) group_.conjugate_by(m, *a.conj);
    const RingElem v = R.bind(at(m, a.a, a.b));
    r += a.coef * (a.cj ? R.involution(v) : v);
  }
  return r;
}

std::pair<IndexPair, RingElem> DecompEngine::mirror(IndexPair, const RingElem&) const {
  throw InternalCheckFailure("conjugated atoms need an involution");
}

FactorList DecompEngine::lin(const SigmaView& s, const Atoms& atoms, IndexPair kl) const {
  auto same_word = [](const WordPtr& a, const WordPtr& b) {
    if (!a || !b) return !a && !b;
    return a == b || *a == *b;
  };
  Atoms merged;
  for (const auto& a : atoms) {
    bool found = false;
    for (auto& m : merged) {
      if (m.a == a.a && m.b == a.b && m.cj == a.cj && same_word(m.conj, a.conj)) {
        m.coef += a.coef;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(a);
  }
  FactorList out;
  for (const auto& a : merged) {
    const SigmaView sub = a.conj ? conjugated_view(group_, s, a.conj) : s;
    IndexPair target = kl;
    RingElem z = a.coef;
    if (a.cj) std::tie(target, z) = mirror(kl, a.coef);
    append(out, k1(sub, {a.a, a.b}, target, z));
  }
  return out;
}

void DecompEngine::expect_product(const FactorList& factors, const ThetaMatrix& expected, const char* step) const {
  if (evaluate_factors(group_, root_, factors) != expected) {
    throw InternalCheckFailure(std::string("step check failed: ") + step);
  }
}

void DecompEngine::expect(bool ok, const char* step) const {
  if (!ok) throw InternalCheckFailure(std::string("step check failed: ") + step);
}

}  // namespace oddgroup
