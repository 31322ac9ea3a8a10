#include "tracefree/serialize.hpp"

#include <algorithm>
#include <cmath>

namespace tracefree {

namespace {

double finite(Real x) {
  double d = static_cast<double>(x);
  return d == 0.0 ? 0.0 : d;  // no negative zero in output
}

}  // namespace

Json to_json(const ComplexValue& v) {
  Json j;
  j["re"] = finite(v.re());
  j["im"] = finite(v.im());
  if (v.exact) j["exact"] = to_string(*v.exact);
  return j;
}

Json to_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [k, v] : a) j[k.index_string()] = to_json(v);
  return j;
}

Json to_json(const S0Point& p) {
  Json j;
  j["pairs"] = to_json(p.pairs);
  j["triples"] = to_json(p.triples);
  return j;
}

Json to_json(const F2Point& p) {
  Json j;
  j["pairs"] = to_json(p.coords);
  if (p.lift) {
    j["lift_status"] = p.lift->status();
    j["residuals"] = {{"rectangle", finite(p.lift->rectangle_residual)},
                      {"hexagon", finite(p.lift->hexagon_residual)}};
    if (p.lift->pivot) {
      const auto& t = *p.lift->pivot;
      j["pivot"] = VarKey::triple(t[0], t[1], t[2]).index_string();
    }
    Json lifts = Json::array();
    for (const auto& l : p.lift->lifts) lifts.push_back({{"triples", to_json(l.triples)}});
    j["lifts"] = lifts;
  }
  return j;
}

Json to_json(const CoverPoint& p) {
  Json j;
  j["z_pair"] = to_json(p.z_pair);
  j["z_quad"] = to_json(p.z_quad);
  return j;
}

std::string to_string(const UPoly& p, const VarKey& v) {
  return Polynomial::from_univariate(p.coeffs(), v).to_string();
}

Json eliminant_json(const VarKey& v, const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"variable", v.name()}, {"text", to_string(p, v)}, {"coefficients", coeffs}};
}

std::string ideal_text(const Ideal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators) out += g.to_string() + "\n";
  return out;
}

Json to_json(const Ideal& ideal) {
  Json ring = Json::array();
  for (const auto& v : ideal.ring) ring.push_back(v.name());
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  return {{"provenance", std::string(to_string(ideal.provenance))},
          {"ring", ring},
          {"count", ideal.generators.size()},
          {"generators", gens}};
}

Json to_json(const GroupPresentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(std::string(1, g.symbol) + std::to_string(g.index));
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(to_string(r));
  return {{"generators", gens}, {"relators", rels}};
}

}  // namespace tracefree
