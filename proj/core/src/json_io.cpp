#include "lrs/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrs/error.hpp"

namespace lrs {

using nlohmann::json;

namespace {

Rational rational_from(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(ErrorCode::parse_error, "expected a rational string, got " + v.dump());
}

std::vector<Rational> list_from(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw Error(ErrorCode::parse_error, std::string("missing array '") + key + "'");
  std::vector<Rational> out;
  for (const auto& v : doc[key]) out.push_back(rational_from(v));
  return out;
}

json strings(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.to_string());
  return a;
}

}  // namespace

SequenceSpec spec_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::parse_error, "spec must be a JSON object");
  return SequenceSpec(CoefficientSet(list_from(doc, "coefficients")), list_from(doc, "initials"));
}

std::string spec_to_json(const SequenceSpec& spec) {
  const json doc = {{"coefficients", strings(spec.coefficients().coeffs())}, {"initials", strings(spec.initials())}};
  return doc.dump();
}

SequenceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return spec_from_json(ss.str());
}

std::string terms_to_json(long from, const std::vector<Rational>& terms) {
  return json{{"from", from}, {"terms", strings(terms)}}.dump();
}

std::string genfunc_to_json(const RationalGF& gf) {
  const json doc = {{"numerator", strings(gf.numerator().coeffs())},
                    {"denominator", strings(gf.denominator().coeffs())},
                    {"text", gf.to_string()}};
  return doc.dump();
}

std::string roots_to_json(const RootDecomposition& roots, int digits) {
  json rs = json::array();
  for (const auto& r : roots.roots())
    rs.push_back({{"re", r.alpha.re.to_string(digits)}, {"im", r.alpha.im.to_string(digits)}, {"mult", r.multiplicity}});
  json res = json::array();
  for (const auto& x : roots.residuals()) res.push_back(x.to_string(6));
  return json{{"roots", rs}, {"residuals", res}, {"precision_bits", roots.precision_bits()}}.dump();
}

std::string representation_to_json(const IrsRepresentation& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms) terms.push_back({{"delta", t.delta}, {"c", t.c.to_string()}});
  return json{{"terms", terms}}.dump();
}

std::string verdict_to_json(const IdentityVerdict& verdict) {
  json doc = {{"identity", verdict.identity},
              {"ranges", verdict.ranges},
              {"passed", verdict.passed},
              {"cases", verdict.cases}};
  if (verdict.counterexample) {
    const auto& c = *verdict.counterexample;
    doc["counterexample"] = {{"parameters", c.parameters}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}};
  }
  return doc.dump();
}

std::string cells_to_json(const std::vector<std::vector<std::string>>& cells) { return json(cells).dump(); }

}  // namespace lrs
