#include "kdw/serialize.hpp"

namespace kdw::io {

json to_json(const ModOneOdd& x) { return x.to_string(); }

json to_json(const XiVector& v) {
  json out = json::array();
  for (const auto& e : v.entries) out.push_back(to_json(e));
  return out;
}

json to_json(const QuotientCoord& q) {
  json entries = json::array();
  for (const auto& e : q.entries) entries.push_back(to_json(e));
  return json{{"k", q.k}, {"kind", std::string(quotient_kind_name(q.kind))}, {"entries", entries}};
}

json to_json(const QuotientTriple& t) {
  json out = json::array();
  for (const auto& q : t.c) out.push_back(to_json(q));
  return out;
}

ModOneOdd fraction_from_json(const json& j) {
  if (!j.is_string()) throw Error(Errc::InvalidArgument, "fraction must be a string");
  return ModOneOdd::parse(j.get<std::string>());
}

namespace {

std::vector<ModOneOdd> fractions(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw Error(Errc::InvalidArgument, "expected an array of " + std::to_string(expected) + " fractions");
  }
  std::vector<ModOneOdd> out;
  for (const json& e : j) out.push_back(fraction_from_json(e));
  return out;
}

}  // namespace

XiVector term_from_json(const json& j, const XiVector& zero) {
  return XiVector{zero.k, fractions(j, zero.entries.size())};
}

QuotientCoord term_from_json(const json& j, const QuotientCoord& zero) {
  if (j.at("k").get<std::int64_t>() != zero.k ||
      j.at("kind").get<std::string>() != quotient_kind_name(zero.kind)) {
    throw Error(Errc::InvalidArgument, "quotient coordinate shape mismatch");
  }
  return QuotientCoord{zero.k, zero.kind, fractions(j.at("entries"), zero.entries.size())};
}

QuotientTriple term_from_json(const json& j, const QuotientTriple& zero) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::InvalidArgument, "triple must have 3 entries");
  return QuotientTriple{
      {term_from_json(j[0], zero.c[0]), term_from_json(j[1], zero.c[1]), term_from_json(j[2], zero.c[2])}};
}

}  // namespace kdw::io
