#include "rotaperm/json_io.hpp"

#include <string>

#include "rotaperm/error.hpp"

namespace rotaperm {

namespace {

Json bitstrings(const std::vector<Coeffs>& v) {
  Json arr = Json::array();
  for (Coeffs c : v) arr.push_back(c.to_bitstring());
  return arr;
}

Elem elem_from_json(const Field& f, const Json& j) {
  if (!j.is_string()) fail(ErrorCode::kInvalidArgument, "expected a hex string, got " + j.dump());
  return parse_elem(f, j.get<std::string>());
}

}  // namespace

Json triple_to_json(const Triple& p) { return Json::array({to_hex(p.x), to_hex(p.y), to_hex(p.z)}); }

Json to_json(const PermReport& r) {
  Json j;
  j["family"] = r.coeffs.to_bitstring();
  j["m"] = r.m;
  j["permutation"] = r.is_permutation;
  j["points"] = r.points_checked;
  if (r.witness) {
    j["witness"] = Json::array({triple_to_json(r.witness->first), triple_to_json(r.witness->second)});
  }
  return j;
}

Json to_json(const Inversion& inv) {
  Json j;
  j["target"] = triple_to_json(inv.target);
  j["preimage"] = triple_to_json(inv.preimage);
  j["method"] = std::string(to_string(inv.method));
  return j;
}

Json to_json(const ExtField& ext, const LiftedPoly& p) {
  Json j;
  j["m"] = ext.base().m();
  Json cubic = Json::array();
  for (Elem c : ext.cubic()) cubic.push_back(to_hex(c));
  j["cubic"] = cubic;
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    terms.push_back(Json{{"e", t.e}, {"c", triple_to_json(ext.coords(t.c))}});
  }
  j["terms"] = terms;
  return j;
}

LiftedPoly lifted_from_json(const ExtField& ext, const Json& j) {
  try {
    if (j.at("m").get<unsigned>() != ext.base().m()) {
      fail(ErrorCode::kInvalidArgument, "polynomial is over m=" + j.at("m").dump());
    }
    const auto& cubic = j.at("cubic");
    const auto expected = ext.cubic();
    if (!cubic.is_array() || cubic.size() != 4) fail(ErrorCode::kInvalidArgument, "cubic needs 4 entries");
    for (std::size_t i = 0; i < 4; ++i) {
      if (elem_from_json(ext.base(), cubic[i]) != expected[i]) {
        fail(ErrorCode::kInvalidArgument, "polynomial uses a different cubic extension");
      }
    }
    std::vector<LiftedPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("c");
      if (!c.is_array() || c.size() != 3) fail(ErrorCode::kInvalidArgument, "coefficient needs 3 coordinates");
      const std::uint64_t e = t.at("e").get<std::uint64_t>();
      if (e >= ext.size()) fail(ErrorCode::kInvalidArgument, "exponent " + std::to_string(e) + " out of range");
      const Triple xyz{elem_from_json(ext.base(), c[0]), elem_from_json(ext.base(), c[1]),
                       elem_from_json(ext.base(), c[2])};
      terms.push_back({e, ext.from_coords(xyz)});
    }
    return LiftedPoly::from_terms(ext, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kSyntaxError, std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const ExtField& ext, const QmWitness& w) {
  Json j;
  j["a"] = triple_to_json(ext.coords(w.a));
  j["c"] = triple_to_json(ext.coords(w.c));
  j["d"] = w.d;
  return j;
}

Json to_json(const std::vector<CertReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["name"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["mandatory"] = r.mandatory;
    j["notes"] = r.notes;
    if (!r.diff.is_zero()) j["diff"] = r.diff.to_text();
    arr.push_back(j);
  }
  return arr;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["m"] = r.ms;
  Json results = Json::object();
  for (unsigned m : r.ms) results[std::to_string(m)] = bitstrings(r.results.at(m));
  j["results"] = results;
  Json counts = Json::object();
  for (unsigned m : r.ms) counts[std::to_string(m)] = r.results.at(m).size();
  j["counts"] = counts;
  j["intersection"] = bitstrings(r.intersection);
  j["candidates"] = r.ms.size() >= 2 ? bitstrings(search_diff(r)) : Json::array();
  return j;
}

}  // namespace rotaperm
