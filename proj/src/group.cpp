#include "oddgroup/group.hpp"

#include <algorithm>

namespace oddgroup {

std::string group_kind_name(GroupKind kind) {
  return kind == GroupKind::Ortho ? "ortho" : "unitary";
}

std::string describe(const ElemGen& g) {
  auto text = [](const RingElem& v) {
    std::string s = std::to_string(v.a());
    if (v.ring() && v.ring()->family == RingFamily::Quadratic) s += "+" + std::to_string(v.b()) + "t";
    return s;
  };
  if (g.kind == GenKind::Short) {
    return "T_{" + std::to_string(g.i) + "," + std::to_string(g.j) + "}(" + text(g.x) + ")";
  }
  return "T_{" + std::to_string(g.i) + "}(" + text(g.x) + "," + text(g.y) + ")";
}

void RelationOutcome::record(bool ok, const std::string& witness) {
  ++checked;
  if (ok) return;
  if (failed++ == 0) counterexample = witness;
}

ClassicalGroup::ClassicalGroup(Ring ring, int n)
    : ring_(std::move(ring)), n_(n), theta_(oddgroup::theta(n)), hb_(oddgroup::theta_hb(n)) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (!ring_.data()) throw InvalidInput("group needs a validated ring");
}

void ClassicalGroup::check_short_indices(int i, int j) const {
  if (i == 0 || j == 0 || !in_theta(n_, i) || !in_theta(n_, j) || i == j || i == -j) {
    throw InvalidInput("short root needs i, j in Theta_hb with i != +-j, got (" +
                       std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

void ClassicalGroup::check_extra_index(int i) const {
  if (i == 0 || !in_theta(n_, i)) {
    throw InvalidInput("extra short root needs i in Theta_hb, got " + std::to_string(i));
  }
}

ElemGen ClassicalGroup::short_root(int i, int j, const RingElem& x) const {
  check_short_indices(i, j);
  return ElemGen{GenKind::Short, i, j, ring_.bind(x), ring_.zero()};
}

ElemGen ClassicalGroup::extra_root(int i, const RingElem& x, const RingElem& y) const {
  check_extra_index(i);
  return ElemGen{GenKind::Extra, i, 0, ring_.bind(x), ring_.bind(y)};
}

ElemGen ClassicalGroup::checked(const ElemGen& g) const {
  check_generator(g);
  return g;
}

ThetaMatrix ClassicalGroup::identity() const { return oddgroup::identity(ring_, n_); }

ThetaMatrix ClassicalGroup::matrix(const ElemGen& g) const {
  ThetaMatrix m = identity();
  const SparseDelta d = offdiag(g);
  for (int t = 0; t < d.size; ++t) {
    const auto& e = d.entries[static_cast<std::size_t>(t)];
    at(m, e.row, e.col) += e.value;
  }
  return m;
}

ThetaMatrix ClassicalGroup::evaluate(const Word& w) const {
  ThetaMatrix m = identity();
  for (const auto& g : w) right_multiply(m, g);
  return m;
}

Word ClassicalGroup::inverse(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

void ClassicalGroup::left_multiply(ThetaMatrix& m, const ElemGen& g) const {
  const SparseDelta d = offdiag(g);
  const Eigen::Index cols = m.cols();
  std::array<ThetaRow, 3> deltas;
  for (int t = 0; t < d.size; ++t) {
    const auto& e = d.entries[static_cast<std::size_t>(t)];
    deltas[static_cast<std::size_t>(t)] = m.row(position(n_, e.col));
    for (Eigen::Index c = 0; c < cols; ++c)
      deltas[static_cast<std::size_t>(t)](c) = e.value * deltas[static_cast<std::size_t>(t)](c);
  }
  for (int t = 0; t < d.size; ++t) {
    const auto r = position(n_, d.entries[static_cast<std::size_t>(t)].row);
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) += deltas[static_cast<std::size_t>(t)](c);
  }
}

void ClassicalGroup::right_multiply(ThetaMatrix& m, const ElemGen& g) const {
  const SparseDelta d = offdiag(g);
  const Eigen::Index rows = m.rows();
  std::array<ThetaColumn, 3> deltas;
  for (int t = 0; t < d.size; ++t) {
    const auto& e = d.entries[static_cast<std::size_t>(t)];
    deltas[static_cast<std::size_t>(t)] = m.col(position(n_, e.row));
    for (Eigen::Index r = 0; r < rows; ++r)
      deltas[static_cast<std::size_t>(t)](r) = deltas[static_cast<std::size_t>(t)](r) * e.value;
  }
  for (int t = 0; t < d.size; ++t) {
    const auto c = position(n_, d.entries[static_cast<std::size_t>(t)].col);
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) += deltas[static_cast<std::size_t>(t)](r);
  }
}

void ClassicalGroup::conjugate_by(ThetaMatrix& m, const Word& w) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    left_multiply(m, *it);
    right_multiply(m, inverse(*it));
  }
}

Word ClassicalGroup::p_word(int i, int j) const {
  return {short_root(i, j, ring_.one()), short_root(j, i, -ring_.one()),
          short_root(i, j, ring_.one())};
}

ThetaMatrix ClassicalGroup::p_matrix(int i, int j) const { return evaluate(p_word(i, j)); }

std::pair<int, int> ClassicalGroup::random_short_slot(std::mt19937_64& rng, bool& is_extra,
                                                      int& extra_index) const {
  const int h = 2 * n_;
  const int short_slots = h * (h - 2);
  std::uniform_int_distribution<int> dist(0, short_slots + h - 1);
  int s = dist(rng);
  if (s >= short_slots) {
    is_extra = true;
    extra_index = hb_[static_cast<std::size_t>(s - short_slots)];
    return {0, 0};
  }
  is_extra = false;
  for (int i : hb_) {
    for (int j : hb_) {
      if (j == i || j == -i) continue;
      if (s-- == 0) return {i, j};
    }
  }
  throw InternalCheckFailure("random slot out of range");
}

Word ClassicalGroup::random_word(std::mt19937_64& rng, int length) const {
  Word w;
  for (int t = 0; t < length; ++t) w.push_back(random_generator(rng));
  return w;
}

bool ClassicalGroup::is_trivial(const ElemGen& g) const {
  return g.x.is_zero() && (g.kind == GenKind::Short || g.y.is_zero());
}

Word ClassicalGroup::normalize(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (is_trivial(g)) continue;
    if (!out.empty()) {
      if (auto merged = merge(out.back(), g)) {
        out.pop_back();
        if (!is_trivial(*merged)) out.push_back(*merged);
        continue;
      }
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace oddgroup
