#pragma once

// JSON and CSV renderings of the domain records. Integers are always
// written as decimal strings so no consumer truncates them; rationals as
// "num/den".

#include <string>
#include <vector>

#include <json.hpp>

#include "congruent/diophantine.hpp"
#include "congruent/generators.hpp"
#include "congruent/oracle.hpp"
#include "congruent/rational.hpp"
#include "congruent/triples.hpp"

namespace congruent {

using nlohmann::json;

json to_json(const BigInt& v);
json to_json(const Rational& r);
// Sides in canonical order: legs ascending, then the hypotenuse.
json to_json(const RationalTriangle& t);
json to_json(const PrimitiveTriple& t);
json to_json(const CongruentWitness& w);
json to_json(const Certificate& c);
json to_json(const UnknownUpToBound& u);
json to_json(const CertifyResult& r);
json to_json(const QuarticSolution& s);
json to_json(const PellSolution& s);
json to_json(const PrimeCriterionHit& h);
json to_json(const UnitFractionTriple& t);

std::string csv_join(const std::vector<std::string>& fields);

std::string triple_csv_header();
std::string to_csv(const PrimitiveTriple& t);

std::string witness_csv_header();
std::string to_csv(const CongruentWitness& w);

}  // namespace congruent
