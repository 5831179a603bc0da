#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "a2/cocycle.hpp"
#include "a2/hochschild.hpp"

namespace a2 {

using json = nlohmann::ordered_json;

/// The value as a polynomial in q = zeta_L^q_exp, e.g. "3*q^2 - q". For prime
/// N the representative with the most zero coefficients is chosen. Falls back
/// to the canonical form in z = zeta_L when L != N.
std::string q_lift(const Braiding& br, const Cyclotomic& c);

/// Parses a scalar expression over Q(zeta_L): rationals, q, q12, q21, z (zeta_L),
/// + - * / ^ (integer exponents) and parentheses, e.g. "(q^2 - q)/3".
Cyclotomic parse_scalar(const Braiding& br, std::string_view text);

/// Comma-separated list of scalar expressions; throws unless it has `count` entries.
std::vector<Cyclotomic> parse_scalar_list(const Braiding& br, std::string_view text, std::size_t count);

/// Rationals are written over Q so equal values serialize identically.
json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// Array of {monomial, coeff}, sorted by monomial.
json to_json(const Element& e);
Element element_from_json(const json& j);

json to_json(const DeformationParams& l);
DeformationParams params_from_json(const json& j);

/// Scalars carry the canonical coefficients and the q-lift.
json scalar_json(const Braiding& br, const Cyclotomic& c);

json to_json(const Braiding& br, const CocycleTable& t);
CocycleTable table_from_json(const json& j);

json to_json(const Braiding& br, const SectionMap& g);
json to_json(const Braiding& br, const Functional& f);
json to_json(const Braiding& br, const HochschildCocycle& h);
json to_json(const Braiding& br, const PurityVerdict& v);

/// "a,b,value" rows with quoted monomials "n2,n12,n1" and q-lifted values.
std::string to_csv(const Braiding& br, const Bifunctional& t);
/// Rows indexed by a, columns by b.
std::string to_markdown(const Braiding& br, const Bifunctional& t);

/// "x2^2 x12" style label and the "n2,n12,n1" key used on the command line.
std::string monomial_key(const Monomial& m);

}  // namespace a2
