#include "a2/hochschild.hpp"

#include <algorithm>

#include "a2/linsolve.hpp"
#include "a2/qsymbols.hpp"
#include "a2/reference.hpp"

namespace a2 {

namespace {

void require_atypical(const Lifting& L) {
  if (L.kind() != Case::Atypical) throw Error("invariant Hochschild cocycles need the atypical case");
}

Cyclotomic evaluate_left(const Bifunctional& eta, const Element& x, const Monomial& c) {
  Cyclotomic out;
  for (const auto& [m, k] : x)
    if (!eta(m, c).is_zero()) out += k * eta(m, c);
  return out;
}

Cyclotomic evaluate_right(const Bifunctional& eta, const Monomial& a, const Element& y) {
  Cyclotomic out;
  for (const auto& [m, k] : y)
    if (!eta(a, m).is_zero()) out += k * eta(a, m);
  return out;
}

}  // namespace

std::array<Bifunctional, 5> eta_basis(const Lifting& L) {
  require_atypical(L);
  const Braiding& br = L.braiding();
  std::array<Bifunctional, 5> eta{Bifunctional(3), Bifunctional(3), Bifunctional(3), Bifunctional(3),
                                  Bifunctional(3)};
  for (int a = 1; a <= 2; ++a) {
    eta[0].set(Monomial{0, 0, a}, Monomial{0, 0, 3 - a}, Cyclotomic(1));
    eta[1].set(Monomial{a, 0, 0}, Monomial{3 - a, 0, 0}, Cyclotomic(1));
  }
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n12 = 0; n12 <= 2; ++n12) {
      int m12 = 3 - n12 - n1;
      if (m12 < 0 || m12 > 2) continue;
      Monomial r{0, n12, n1}, s{n1, m12, 0};
      if (r.is_one() || s.is_one()) continue;
      long e = static_cast<long>(n1) * (n1 - 1) / 2;
      eta[2].set(r, s, q_factorial(static_cast<unsigned>(n1), br.q()) * br.q12().pow(e));
    }
  eta[3].set(Monomial{0, 0, 2}, Monomial{1, 0, 0}, Cyclotomic(1));
  eta[3].set(Monomial{0, 0, 1}, Monomial{0, 1, 0}, Cyclotomic(1));
  eta[4].set(Monomial{0, 0, 1}, Monomial{2, 0, 0}, Cyclotomic(1));
  eta[4].set(Monomial{0, 1, 0}, Monomial{1, 0, 0}, Cyclotomic(1));
  return eta;
}

Bifunctional beta_coboundary(const Lifting& L, const Monomial& b) {
  const auto& inv = invariant_monomials();
  if (std::find(inv.begin(), inv.end(), b) == inv.end())
    throw Error("beta_coboundary: " + to_string(b) + " is not an invariant monomial");
  Bifunctional out(L.N());
  for (const auto& r : L.basis()) {
    if (r.is_one()) continue;
    for (const auto& s : L.basis()) {
      if (s.is_one()) continue;
      Cyclotomic c = L.nichols().mul(r, s).coefficient(b);
      if (!c.is_zero()) out.set(r, s, -c);
    }
  }
  return out;
}

Bifunctional to_bifunctional(const Lifting& L, const HochschildCocycle& eta) {
  Bifunctional out(L.N());
  auto basis = eta_basis(L);
  for (std::size_t j = 0; j < 5; ++j)
    if (!eta.e[j].is_zero()) out += basis[j] * eta.e[j];
  for (std::size_t i = 0; i < 8; ++i)
    if (!eta.beta[i].is_zero()) out += beta_coboundary(L, invariant_monomials()[i]) * eta.beta[i];
  return out;
}

bool check_hochschild_cocycle(const Lifting& L, const Bifunctional& eta) {
  const Algebra& B = L.nichols();
  for (const auto& a : L.basis())
    for (const auto& b : L.basis())
      for (const auto& c : L.basis()) {
        Cyclotomic v = evaluate_right(eta, a, B.mul(b, c)) - evaluate_left(eta, B.mul(a, b), c);
        if (a.is_one()) v += eta(b, c);
        if (c.is_one()) v -= eta(a, b);
        if (!v.is_zero()) return false;
      }
  return true;
}

bool is_coboundary(const Lifting& L, const Bifunctional& eta, bool invariant_support) {
  std::vector<Monomial> unknowns;
  if (invariant_support) {
    unknowns.assign(invariant_monomials().begin(), invariant_monomials().end());
  } else {
    for (const auto& b : L.basis())
      if (!b.is_one()) unknowns.push_back(b);
  }
  Matrix A;
  std::vector<Cyclotomic> rhs;
  for (const auto& r : L.basis()) {
    if (r.is_one()) continue;
    for (const auto& s : L.basis()) {
      if (s.is_one()) continue;
      const Element& prod = L.nichols().mul(r, s);
      std::vector<Cyclotomic> row;
      row.reserve(unknowns.size());
      bool any = !eta(r, s).is_zero();
      for (const auto& u : unknowns) {
        row.push_back(prod.coefficient(u));
        any = any || !row.back().is_zero();
      }
      if (!any) continue;
      A.push_back(std::move(row));
      rhs.push_back(-eta(r, s));
    }
  }
  if (A.empty()) return true;
  return solve(A, rhs).has_value();
}

Bifunctional exponential(const Lifting& L, const Bifunctional& eta, int k) {
  Bifunctional sum = Bifunctional::epsilon(L.N());
  Bifunctional power = Bifunctional::epsilon(L.N());
  Rational factorial = 1;
  for (int j = 1; j <= k; ++j) {
    power = convolve(L, power, eta);
    factorial *= j;
    sum += power * Cyclotomic(Rational(1) / factorial);
  }
  return sum;
}

std::string to_string(Purity p) { return p == Purity::Exponential ? "Exponential" : "Pure"; }

bool purity_condition_a(const DeformationParams& l) {
  if (l.serre_deformed()) return false;
  int nonzero = !l.l1.is_zero() + !l.l2.is_zero() + !l.l12.is_zero();
  return nonzero <= 1;
}

bool purity_condition_b(const Braiding& br, const DeformationParams& l) {
  if (l.l112.is_zero() || l.l122.is_zero()) return false;
  const Cyclotomic three(3);
  const Cyclotomic& q = br.q();
  return l.l1 == l.l112 * l.l112 / (three * l.l122) && l.l2 == l.l122 * l.l122 / (three * l.l112) &&
         l.l12 == (q * q - q) * l.l112 * l.l122 / three;
}

Witness witness_construct(const Lifting& L) {
  require_atypical(L);
  const DeformationParams& l = L.params();
  Witness w;
  if (purity_condition_a(l)) {
    w.alpha = {};
    w.eta.e = {l.l1, l.l2, l.l12, Cyclotomic(0), Cyclotomic(0)};
    w.eta.beta = reference::bvals_from_alpha(L.braiding(), l, w.alpha);
    return w;
  }
  if (purity_condition_b(L.braiding(), l)) {
    auto data = reference::case_b_data(L.braiding(), l);
    w.alpha = data.alpha;
    w.eta.e = {l.l1, l.l2, Cyclotomic(0), l.l112, l.l122};
    w.eta.beta = data.bvals;
    return w;
  }
  throw Error("witness_construct: lambda satisfies neither exponential condition");
}

bool verify_witness(const Lifting& L, const Witness& w, const CocycleTable& sigma) {
  auto lhs = orbit_act(L, alpha_from_params(L, w.alpha), sigma);
  return lhs.values == exponential(L, to_bifunctional(L, w.eta), 5);
}

PurityVerdict classify_purity(const Lifting& L) {
  require_atypical(L);
  PurityVerdict v;
  if (purity_condition_a(L.params())) v.condition = 'a';
  else if (purity_condition_b(L.braiding(), L.params())) v.condition = 'b';
  if (v.condition == 0) {
    v.tag = Purity::Pure;
    v.verified = true;
    return v;
  }
  v.tag = Purity::Exponential;
  v.witness = witness_construct(L);
  v.verified = verify_witness(L, *v.witness, sigma_table(L));
  return v;
}

}  // namespace a2
