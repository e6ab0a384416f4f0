#include "lieperiod/io/json.hpp"

#include <stdexcept>
#include <string>

namespace lieperiod::io {

Json to_json(const NCPoly& f) {
  Json out = Json::array();
  for (const auto& [w, c] : f.terms()) out.push_back({{"word", w.str()}, {"coef", arith::to_string(c)}});
  return out;
}

NCPoly ncpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("NCPoly JSON: expected an array");
  NCPoly out;
  for (const auto& t : j) {
    if (!t.contains("word") || !t.contains("coef")) throw std::invalid_argument("NCPoly JSON: term needs word and coef");
    out.add_term(Word::parse(t.at("word").get<std::string>()), arith::parse_rational(t.at("coef").get<std::string>()));
  }
  return out;
}

Json to_json(const PairRelation& rel) {
  Json terms = Json::array();
  for (const auto& [key, c] : rel.coeffs)
    terms.push_back({{"i", key.first}, {"j", key.second}, {"coef", arith::to_string(c)}});
  return {{"weight", rel.weight}, {"kind", std::string(ihara::to_string(rel.kind))}, {"terms", terms}};
}

PairRelation pair_relation_from_json(const Json& j) {
  try {
    const auto kind = ihara::parse_pair_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("PairRelation JSON: unknown kind");
    PairRelation rel(j.at("weight").get<int>(), *kind);
    for (const auto& t : j.at("terms"))
      rel.add(t.at("i").get<int>(), t.at("j").get<int>(), arith::parse_rational(t.at("coef").get<std::string>()));
    return rel;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("PairRelation JSON: ") + e.what());
  }
}

Json to_json(const period::WeightedPoly& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.weight(); ++k) coeffs.push_back(arith::to_string(p.poly().coeff(k)));
  return {{"w", p.weight()}, {"coeffs", coeffs}};
}

period::WeightedPoly weighted_poly_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(arith::parse_rational(c.get<std::string>()));
    return period::WeightedPoly(PolyQ(std::move(coeffs)), j.at("w").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("WeightedPoly JSON: ") + e.what());
  }
}

Json kernel_report(int weight, const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<relkernel::IntVector>& kernel, int cusp_dim) {
  Json jp = Json::array();
  for (const auto& [i, j] : pairs) jp.push_back(Json::array({i, j}));
  Json jk = Json::array();
  for (const auto& v : kernel) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(arith::to_string(x));
    jk.push_back(row);
  }
  return {{"weight", weight}, {"pairs", jp}, {"kernel", jk}, {"dim", kernel.size()}, {"cusp_dim", cusp_dim}};
}

}  // namespace lieperiod::io
