#pragma once

#include <array>
#include <optional>
#include <string>

#include "a2/cocycle.hpp"

namespace a2 {

/// eta = sum e_j eta_j + sum beta_i beta_{b_i}, with e = (e1, e2, e12, e112, e122)
/// and beta indexed like invariant_monomials().
struct HochschildCocycle {
  std::array<Cyclotomic, 5> e;
  std::array<Cyclotomic, 8> beta;
};

/// eta1, eta2, eta12, eta112, eta122 for N = 3, q12 = q21 = q.
std::array<Bifunctional, 5> eta_basis(const Lifting& L);

/// beta_b(r, s) = -(coefficient of b in rs) for r, s of positive degree.
/// Throws Error unless b is one of invariant_monomials().
Bifunctional beta_coboundary(const Lifting& L, const Monomial& b);

Bifunctional to_bifunctional(const Lifting& L, const HochschildCocycle& eta);

/// eps(a) eta(b, c) - eta(ab, c) + eta(a, bc) - eta(a, b) eps(c) = 0 on all basis triples.
bool check_hochschild_cocycle(const Lifting& L, const Bifunctional& eta);

/// Whether eta(r, s) = -f(rs) on positive-degree pairs for some f supported on
/// invariant_monomials() (or on every positive-degree monomial).
bool is_coboundary(const Lifting& L, const Bifunctional& eta, bool invariant_support = true);

/// sum_{j <= k} eta^{*j} / j! for the braided convolution.
Bifunctional exponential(const Lifting& L, const Bifunctional& eta, int k = 5);

enum class Purity { Exponential, Pure };
std::string to_string(Purity p);

struct Witness {
  std::array<Cyclotomic, 8> alpha;
  HochschildCocycle eta;
};

struct PurityVerdict {
  Purity tag = Purity::Pure;
  char condition = 0;  // 'a', 'b' or 0
  std::optional<Witness> witness;
  bool verified = false;
};

/// lambda112 = lambda122 = 0 and at most one of lambda1, lambda2, lambda12 nonzero.
bool purity_condition_a(const DeformationParams& l);
/// lambda112 lambda122 != 0 with the three closed relations.
bool purity_condition_b(const Braiding& br, const DeformationParams& l);

/// Throws Error when lambda satisfies neither condition.
Witness witness_construct(const Lifting& L);

/// alpha -> sigma == e^eta on every basis pair.
bool verify_witness(const Lifting& L, const Witness& w, const CocycleTable& sigma);

/// Needs the atypical case.
PurityVerdict classify_purity(const Lifting& L);

}  // namespace a2
