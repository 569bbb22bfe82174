#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "oddgroup/certificate.hpp"
#include "oddgroup/congruence.hpp"
#include "oddgroup/context.hpp"
#include "oddgroup/hermitian_form.hpp"

namespace oddgroup {

using Json = nlohmann::ordered_json;

// JSON that does not fit the schema: bad syntax, missing keys or wrong types.
// Well-formed documents with impossible values raise InvalidInput instead.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

// Compact form used for every file the tools write.
std::string canonical_dump(const Json& j);
Json parse_json(const std::string& text);

// Z/m elements are integers, quadratic elements [a, b].
Json elem_to_json(const RingElem& x);
RingElem elem_from_json(const Ring& ring, const Json& j);

Json heis_to_json(const HeisElem& h);
HeisElem heis_from_json(const Ring& ring, const Json& j);

// Rows and columns in position order 1..n, 0, -n..-1.
Json matrix_to_json(const ThetaMatrix& m);
ThetaMatrix matrix_from_json(const Ring& ring, int n, const Json& j);

Json gen_to_json(const ClassicalGroup& group, const ElemGen& g);
ElemGen gen_from_json(const ClassicalGroup& group, const Json& j);
Json word_to_json(const ClassicalGroup& group, const Word& w);
Word word_from_json(const ClassicalGroup& group, const Json& j);

Json delta_to_json(const OddFormParam& delta);
OddFormParam delta_from_json(const Ring& ring, const Json& j);

// {"desc", "involution", "lambda", "mu"} plus "delta" for unitary groups.
Json ring_to_json(const Ring& ring, const OddFormParam* delta = nullptr);

GroupContext group_from_json(const std::string& group_tag, const Json& ring, int n);
Json group_header(const ClassicalGroup& group);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json level_to_json(const AdmissiblePair& level);
Json level_to_json(const UnitaryLevel& level);

}  // namespace oddgroup
