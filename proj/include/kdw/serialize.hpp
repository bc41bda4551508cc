#pragma once

// JSON encodings. Fractions are "num/den" strings; a formal sum is a list of
// {"coeff": c, "term": t} sorted by term, with "o" for the zero term.

#include <string>

#include <json.hpp>

#include "kdw/cyclicrep.hpp"
#include "kdw/error.hpp"
#include "kdw/formal_sum.hpp"
#include "kdw/induction.hpp"

namespace kdw::io {

using nlohmann::json;

json to_json(const ModOneOdd& x);
json to_json(const XiVector& v);
json to_json(const QuotientCoord& q);
json to_json(const QuotientTriple& t);

ModOneOdd fraction_from_json(const json& j);
/// The shape (k, kind) is taken from the zero prototype.
XiVector term_from_json(const json& j, const XiVector& zero);
QuotientCoord term_from_json(const json& j, const QuotientCoord& zero);
QuotientTriple term_from_json(const json& j, const QuotientTriple& zero);

template <class Term>
json to_json(const FormalSum<Term>& fs) {
  json out = json::array();
  for (const auto& [t, c] : fs.terms()) {
    out.push_back(json{{"coeff", c}, {"term", t.is_zero() ? json("o") : to_json(t)}});
  }
  return out;
}

template <class Term>
FormalSum<Term> formal_sum_from_json(const json& j, const Term& zero) {
  if (!j.is_array()) throw Error(Errc::InvalidArgument, "formal sum must be a JSON array");
  FormalSum<Term> fs;
  for (const json& entry : j) {
    const json& t = entry.at("term");
    const auto c = entry.at("coeff").get<std::int64_t>();
    fs.add(t.is_string() && t.get<std::string>() == "o" ? zero : term_from_json(t, zero), c);
  }
  return fs;
}

}  // namespace kdw::io
