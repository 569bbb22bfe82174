#include "oddgroup/json_io.hpp"

#include <set>

namespace oddgroup {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing field '") + key + "'");
  return *it;
}

long long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw MalformedInput(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw MalformedInput(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw MalformedInput(std::string("field '") + key + "' must be an array");
  return v;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw MalformedInput("unexpected field '" + it.key() + "'");
}

std::int64_t residue(const Ring& ring, const Json& v) {
  if (!v.is_number_integer()) throw MalformedInput("ring coefficient must be an integer");
  const long long x = v.get<long long>();
  if (x < 0 || x >= ring.data()->m) throw InvalidInput("coefficient " + std::to_string(x) + " is not a canonical residue");
  return x;
}

Json coefficients(const RingElem& x, bool quadratic) {
  return quadratic ? Json::array({x.a(), x.b()}) : Json::array({x.a()});
}

std::array<std::int64_t, 2> coefficients_from(const Json& j, bool quadratic, std::int64_t m) {
  if (!j.is_array() || j.size() != (quadratic ? 2u : 1u))
    throw MalformedInput(quadratic ? "expected two coefficients" : "expected one coefficient");
  std::array<std::int64_t, 2> out{0, 0};
  for (std::size_t t = 0; t < j.size(); ++t) {
    if (!j[t].is_number_integer()) throw MalformedInput("coefficients must be integers");
    out[t] = j[t].get<long long>();
    if (out[t] < 0 || out[t] >= m) throw InvalidInput("coefficient is not a canonical residue");
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("JSON syntax: ") + e.what());
  }
}

Json elem_to_json(const RingElem& x) {
  if (x.ring() && x.ring()->family == RingFamily::Quadratic) return Json::array({x.a(), x.b()});
  return Json(x.a());
}

RingElem elem_from_json(const Ring& ring, const Json& j) {
  if (ring.is_quadratic()) {
    if (!j.is_array() || j.size() != 2) throw MalformedInput("quadratic element must be [a, b]");
    return ring.elem(residue(ring, j[0]), residue(ring, j[1]));
  }
  return ring.elem(residue(ring, j));
}

Json heis_to_json(const HeisElem& h) { return Json::array({elem_to_json(h.x), elem_to_json(h.y)}); }

HeisElem heis_from_json(const Ring& ring, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput("Heisenberg element must be [x, y]");
  return {elem_from_json(ring, j[0]), elem_from_json(ring, j[1])};
}

Json matrix_to_json(const ThetaMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ThetaMatrix matrix_from_json(const Ring& ring, int n, const Json& j) {
  const std::size_t size = static_cast<std::size_t>(2 * n + 1);
  if (!j.is_array() || j.size() != size) throw MalformedInput("matrix must have 2n+1 rows");
  ThetaMatrix m = zero_matrix(ring, n);
  for (std::size_t r = 0; r < size; ++r) {
    if (!j[r].is_array() || j[r].size() != size) throw MalformedInput("matrix rows must have 2n+1 entries");
    for (std::size_t c = 0; c < size; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = elem_from_json(ring, j[r][c]);
  }
  return m;
}

Json gen_to_json(const ClassicalGroup& group, const ElemGen& g) {
  Json out;
  if (g.kind == GenKind::Short) {
    out["g"] = "S";
    out["i"] = g.i;
    out["j"] = g.j;
    out["x"] = elem_to_json(g.x);
  } else {
    out["g"] = "E";
    out["i"] = g.i;
    out["x"] = elem_to_json(g.x);
    if (group.kind() == GroupKind::Unitary) out["y"] = elem_to_json(g.y);
  }
  return out;
}

ElemGen gen_from_json(const ClassicalGroup& group, const Json& j) {
  const Ring& R = group.ring();
  const std::string tag = string_field(j, "g");
  const int i = static_cast<int>(int_field(j, "i"));
  ElemGen g;
  if (tag == "S") {
    only_keys(j, {"g", "i", "j", "x"});
    g = group.short_root(i, static_cast<int>(int_field(j, "j")), elem_from_json(R, field(j, "x")));
  } else if (tag == "E") {
    if (group.kind() == GroupKind::Unitary) {
      only_keys(j, {"g", "i", "x", "y"});
      g = group.extra_root(i, elem_from_json(R, field(j, "x")), elem_from_json(R, field(j, "y")));
    } else {
      only_keys(j, {"g", "i", "x"});
      g = group.extra_root(i, elem_from_json(R, field(j, "x")));
    }
  } else {
    throw MalformedInput("generator tag must be S or E");
  }
  return g;
}

Json word_to_json(const ClassicalGroup& group, const Word& w) {
  Json out = Json::array();
  for (const auto& g : w) out.push_back(gen_to_json(group, g));
  return out;
}

Word word_from_json(const ClassicalGroup& group, const Json& j) {
  if (!j.is_array()) throw MalformedInput("word must be an array of generators");
  Word w;
  w.reserve(j.size());
  for (const auto& g : j) w.push_back(gen_from_json(group, g));
  return w;
}

Json delta_to_json(const OddFormParam& delta) {
  Json elems = Json::array();
  for (const auto& h : delta.elements()) elems.push_back(heis_to_json(h));
  Json out;
  out["kind"] = delta_kind_name(delta.kind());
  out["elems"] = std::move(elems);
  return out;
}

OddFormParam delta_from_json(const Ring& ring, const Json& j) {
  only_keys(j, {"kind", "elems"});
  const std::string kind = string_field(j, "kind");
  const Json& elems = array_field(j, "elems");
  std::vector<HeisElem> given;
  for (const auto& e : elems) given.push_back(heis_from_json(ring, e));
  OddFormParam delta;
  if (kind == "min") {
    delta = OddFormParam::minimal(ring);
  } else if (kind == "max") {
    delta = OddFormParam::maximal(ring);
  } else if (kind == "set") {
    delta = OddFormParam::from_elements(ring, given);
  } else {
    throw MalformedInput("delta kind must be min, max or set");
  }
  if (delta.elements() != given) throw InvalidInput("delta elements do not match the stated " + kind + " parameter");
  return delta;
}

Json ring_to_json(const Ring& ring, const OddFormParam* delta) {
  Json out;
  out["desc"] = ring.description();
  out["involution"] = ring.involution_name();
  out["lambda"] = coefficients(ring.lambda(), ring.is_quadratic());
  out["mu"] = coefficients(ring.mu(), ring.is_quadratic());
  if (delta) out["delta"] = delta_to_json(*delta);
  return out;
}

GroupContext group_from_json(const std::string& group_tag, const Json& ring_json, int n) {
  const bool unitary = group_tag == "unitary";
  if (unitary)
    only_keys(ring_json, {"desc", "involution", "lambda", "mu", "delta"});
  else
    only_keys(ring_json, {"desc", "involution", "lambda", "mu"});
  RingSpec spec = Ring::parse_spec(string_field(ring_json, "desc"), string_field(ring_json, "involution"));
  const bool quadratic = spec.family == RingFamily::Quadratic;
  if (spec.m < 2) throw InvalidInput("modulus must be at least 2");
  spec.lambda = coefficients_from(field(ring_json, "lambda"), quadratic, spec.m);
  spec.mu = coefficients_from(field(ring_json, "mu"), quadratic, spec.m);
  const Ring ring = Ring::validate(spec);
  std::optional<OddFormParam> delta;
  if (unitary) delta = delta_from_json(ring, field(ring_json, "delta"));
  return make_group(group_tag, ring, n, delta);
}

Json group_header(const ClassicalGroup& group) {
  Json out;
  out["group"] = group_kind_name(group.kind());
  const auto* ug = dynamic_cast<const UnitaryGroup*>(&group);
  out["ring"] = ring_to_json(group.ring(), ug ? &ug->delta() : nullptr);
  out["n"] = group.n();
  return out;
}

Json certificate_to_json(const Certificate& cert) {
  const ClassicalGroup& g = *cert.group;
  Json out = group_header(g);
  out["sigma"] = matrix_to_json(cert.sigma);
  out["kind"] = kind_name(cert.kind);
  Json idx;
  idx["i"] = cert.indices.i;
  idx["j"] = cert.indices.j;
  idx["k"] = cert.indices.k;
  idx["l"] = cert.indices.l;
  out["indices"] = std::move(idx);
  out["target"] = gen_to_json(g, cert.target);
  out["bound"] = cert.bound;
  Json factors = Json::array();
  for (const auto& f : cert.factors) {
    Json fj;
    fj["conj"] = word_to_json(g, g.normalize(flatten(f.conj)));
    fj["exp"] = f.exp;
    factors.push_back(std::move(fj));
  }
  out["factors"] = std::move(factors);
  if (g.kind() == GroupKind::Unitary) {
    out["a"] = cert.a ? elem_to_json(*cert.a) : Json(nullptr);
    out["x_out"] = cert.x_out ? elem_to_json(*cert.x_out) : Json(nullptr);
  }
  return out;
}

Certificate certificate_from_json(const Json& j) {
  const std::string tag = string_field(j, "group");
  if (tag == "unitary")
    only_keys(j, {"group", "ring", "n", "sigma", "kind", "indices", "target", "bound", "factors", "a", "x_out"});
  else
    only_keys(j, {"group", "ring", "n", "sigma", "kind", "indices", "target", "bound", "factors"});
  const long long n = int_field(j, "n");
  if (n < 1 || n > 7) throw InvalidInput("n must lie in 1..7");
  const GroupContext ctx = group_from_json(tag, field(j, "ring"), static_cast<int>(n));
  const ClassicalGroup& g = *ctx.group;
  const Ring& R = g.ring();

  Certificate cert;
  cert.group = ctx.group;
  cert.sigma = matrix_from_json(R, g.n(), field(j, "sigma"));
  try {
    cert.kind = kind_from_name(string_field(j, "kind"));
  } catch (const InvalidInput& e) {
    throw MalformedInput(e.what());
  }
  const Json& idx = field(j, "indices");
  only_keys(idx, {"i", "j", "k", "l"});
  cert.indices = {static_cast<int>(int_field(idx, "i")), static_cast<int>(int_field(idx, "j")),
                  static_cast<int>(int_field(idx, "k")), static_cast<int>(int_field(idx, "l"))};
  cert.target = gen_from_json(g, field(j, "target"));
  cert.bound = static_cast<long>(int_field(j, "bound"));
  for (const auto& fj : array_field(j, "factors")) {
    only_keys(fj, {"conj", "exp"});
    Factor f;
    Word w = word_from_json(g, field(fj, "conj"));
    if (!w.empty()) f.conj = prefixed(make_word(std::move(w)), nullptr);
    f.exp = static_cast<int>(int_field(fj, "exp"));
    cert.factors.push_back(std::move(f));
  }
  if (tag == "unitary") {
    const Json& a = field(j, "a");
    const Json& x_out = field(j, "x_out");
    if (!a.is_null()) cert.a = elem_from_json(R, a);
    if (!x_out.is_null()) cert.x_out = elem_from_json(R, x_out);
  }
  return cert;
}

namespace {

Json ideal_gens(const Ideal& I) {
  Json out = Json::array();
  for (const auto& x : I.gens) out.push_back(elem_to_json(x));
  return out;
}

}  // namespace

Json level_to_json(const AdmissiblePair& level) {
  Json out;
  out["I"] = ideal_gens(level.I);
  out["J"] = ideal_gens(level.J);
  return out;
}

Json level_to_json(const UnitaryLevel& level) {
  Json out;
  out["I"] = ideal_gens(level.I);
  out["omega"] = "max";
  return out;
}

}  // namespace oddgroup
