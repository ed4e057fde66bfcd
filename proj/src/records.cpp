#include "congruent/records.hpp"

namespace congruent {

json to_json(const BigInt& v) { return v.get_str(); }

json to_json(const Rational& r) { return r.str(); }

json to_json(const RationalTriangle& t) {
  json out = json::array();
  for (const auto& side : t.sorted_sides()) out.push_back(side.str());
  return out;
}

json to_json(const PrimitiveTriple& t) {
  return {{"m", to_json(t.m)}, {"n", to_json(t.n)}, {"a", to_json(t.a)}, {"b", to_json(t.b)},
          {"c", to_json(t.c)}};
}

json to_json(const CongruentWitness& w) {
  return {{"value", to_json(w.value)},   {"m", to_json(w.seed_m)},
          {"n", to_json(w.seed_n)},      {"sigma1", to_json(w.sigma1)},
          {"sigma2", to_json(w.sigma2)}, {"triangle", to_json(w.triangle)},
          {"class", std::string(to_string(w.klass))}};
}

json to_json(const Certificate& c) {
  return {{"value", to_json(c.value)},
          {"m", to_json(c.seed_m)},
          {"n", to_json(c.seed_n)},
          {"k", to_json(c.scale_k)},
          {"triangle", to_json(c.triangle)}};
}

json to_json(const UnknownUpToBound& u) {
  return {{"value", to_json(u.target)}, {"status", "unknown_up_to_bound"}, {"max_m", std::to_string(u.max_m)}};
}

json to_json(const CertifyResult& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

json to_json(const QuarticSolution& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"x", to_json(s.x)}, {"y", to_json(s.y)},
          {"z", to_json(s.z)}};
}

json to_json(const PellSolution& s) { return {{"k", to_json(s.k)}, {"l", to_json(s.l)}}; }

json to_json(const PrimeCriterionHit& h) {
  return {{"equation", h.equation},
          {"d", to_json(h.divisor)},
          {"solution", to_json(h.solution)},
          {"triangle", to_json(h.triangle)},
          {"value", to_json(h.congruent_value)}};
}

json to_json(const UnitFractionTriple& t) {
  return {{"a", std::to_string(t.a)}, {"b", std::to_string(t.b)}, {"c", std::to_string(t.c)}};
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += fields[i];
  }
  return out;
}

std::string triple_csv_header() { return "m,n,a,b,c"; }

std::string to_csv(const PrimitiveTriple& t) {
  return csv_join({t.m.get_str(), t.n.get_str(), t.a.get_str(), t.b.get_str(), t.c.get_str()});
}

std::string witness_csv_header() { return "value,m,n,sigma1,sigma2,leg1,leg2,hyp,class"; }

std::string to_csv(const CongruentWitness& w) {
  const auto sides = w.triangle.sorted_sides();
  return csv_join({w.value.get_str(), w.seed_m.get_str(), w.seed_n.get_str(), w.sigma1.get_str(),
                   w.sigma2.get_str(), sides[0].str(), sides[1].str(), sides[2].str(),
                   std::string(to_string(w.klass))});
}

}  // namespace congruent
