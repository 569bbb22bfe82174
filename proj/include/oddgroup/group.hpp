#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oddgroup/theta_matrix.hpp"

namespace oddgroup {

enum class GroupKind { Ortho, Unitary };
enum class GenKind { Short, Extra };

std::string group_kind_name(GroupKind kind);

// Symbolic elementary generator: T_ij(x) when Short, T_i(x) or T_i(x, y) when Extra.
// For orthogonal extra-short roots y is ignored and kept zero.
struct ElemGen {
  GenKind kind = GenKind::Short;
  int i = 0;
  int j = 0;
  RingElem x;
  RingElem y;

  friend bool operator==(const ElemGen& a, const ElemGen& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.x == b.x && a.y == b.y;
  }
};

using Word = std::vector<ElemGen>;

std::string describe(const ElemGen& g);

// Pass/fail tally for one relation of a relation table.
struct RelationOutcome {
  std::string relation;
  long checked = 0;
  long failed = 0;
  std::string counterexample;
  bool passed() const { return failed == 0; }
  void record(bool ok, const std::string& witness);
};

using RelationReport = std::vector<RelationOutcome>;

struct SparseEntry {
  int row = 0;
  int col = 0;
  RingElem value;
};

// Off-diagonal entries of g - e; at most three for every generator type.
struct SparseDelta {
  std::array<SparseEntry, 3> entries;
  int size = 0;
  void push(int row, int col, const RingElem& v) { entries[static_cast<std::size_t>(size++)] = {row, col, v}; }
};

// Shared machinery for O_{2n+1} and U_{2n+1}: generator matrices applied as sparse
// row and column operations, words, monomial P_ij words and random sampling.
class ClassicalGroup {
 public:
  ClassicalGroup(Ring ring, int n);
  virtual ~ClassicalGroup() = default;

  virtual GroupKind kind() const = 0;
  virtual SparseDelta offdiag(const ElemGen& g) const = 0;
  virtual ElemGen inverse(const ElemGen& g) const = 0;
  // Throws InvalidInput on bad indices or parameters.
  virtual void check_generator(const ElemGen& g) const = 0;
  virtual bool is_member(const ThetaMatrix& m, std::string* why = nullptr) const = 0;
  virtual ElemGen random_generator(std::mt19937_64& rng) const = 0;

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const std::vector<int>& theta() const { return theta_; }
  const std::vector<int>& theta_hb() const { return hb_; }

  ElemGen short_root(int i, int j, const RingElem& x) const;
  ElemGen extra_root(int i, const RingElem& x, const RingElem& y = RingElem(0)) const;

  ThetaMatrix identity() const;
  ThetaMatrix matrix(const ElemGen& g) const;
  ThetaMatrix evaluate(const Word& w) const;
  ElemGen checked(const ElemGen& g) const;
  Word inverse(const Word& w) const;

  // m <- g m and m <- m g.
  void left_multiply(ThetaMatrix& m, const ElemGen& g) const;
  void right_multiply(ThetaMatrix& m, const ElemGen& g) const;
  // m <- W m W^{-1}.
  void conjugate_by(ThetaMatrix& m, const Word& w) const;

  // T_ij(1) T_ji(-1) T_ij(1).
  Word p_word(int i, int j) const;
  ThetaMatrix p_matrix(int i, int j) const;

  Word random_word(std::mt19937_64& rng, int length) const;
  // Merges adjacent generators on the same root and drops identities.
  Word normalize(const Word& w) const;

  bool is_trivial(const ElemGen& g) const;

 protected:
  void check_short_indices(int i, int j) const;
  void check_extra_index(int i) const;
  virtual std::optional<ElemGen> merge(const ElemGen& a, const ElemGen& b) const = 0;
  std::pair<int, int> random_short_slot(std::mt19937_64& rng, bool& is_extra, int& extra_index) const;

  Ring ring_;
  int n_;
  std::vector<int> theta_;
  std::vector<int> hb_;
};

}  // namespace oddgroup
