#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a2/lifting.hpp"

namespace a2 {

/// gamma: Nichols basis -> E_lambda, stored densely in basis order.
struct SectionMap {
  Case kind = Case::Generic;
  DeformationParams params;
  int N = 0;
  std::vector<Element> values;
  bool verified = false;

  const Element& operator()(const Monomial& b) const {
    return values.at(static_cast<std::size_t>(basis_index(b, N)));
  }
};

/// (tau1(a), tau2(a)) with tau1 = iota pi_B.
std::pair<FreeElement, FreeElement> tau_split(const Lifting& L, const FreeElement& a);

/// pi_E tau2 of a word, as an element of E (ell identifies monomials).
Element pi_E_tau2(const Lifting& L, const Word& u);
/// eps0(pi_E tau2(u)).
Cyclotomic eps0_tau2(const Lifting& L, const Word& u);

/// rho(y_m) = (pi_E (x) pi_B) Delta(iota m) for a basis monomial m.
TensorElement coaction_rho(const Lifting& L, const Monomial& m);
/// rho extended linearly to E.
TensorElement coaction_rho(const Lifting& L, const Element& e);

bool check_H1(const Lifting& L, const Monomial& b);
bool check_H2(const Lifting& L, const Monomial& b);

/// omega(b) = ell(b) - (eps0 (x) ell)(pi_E tau2 (x) pi_B) reduced Delta(b~).
Element section_general(const Lifting& L, const Monomial& b);
Element section_generic_closed(const Lifting& L, const Monomial& b);
Element section_atypical_closed(const Lifting& L, const Monomial& b);

/// Builds gamma from section_general; `verified` records H1 and H2 on every basis element.
SectionMap build_section(const Lifting& L);

/// rho(gamma(b)) = (gamma (x) id) Delta(b) for every basis element.
bool verify_comodule(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures = nullptr);
/// eps0(gamma(b)) = eps(b) for every basis element.
bool verify_counit(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures = nullptr);
/// Every summand of gamma(b) differs from b by a weight in the lattice of the nonzero relations.
bool verify_h_linear(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures = nullptr);

}  // namespace a2
