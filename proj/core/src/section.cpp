#include "a2/section.hpp"

namespace a2 {

namespace {

TensorElement project_pair(const Lifting& L, const FreeTensor& t, bool tau2_left) {
  TensorElement out;
  for (const auto& [key, c] : t) {
    Element left = tau2_left ? pi_E_tau2(L, key.first) : L.pi_E(key.first);
    if (left.is_zero()) continue;
    const Element& right = L.pi_B(key.second);
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
  }
  return out;
}

// (eps0 (x) ell) rho(y_m), an element of E.
Element eps_rho(const Lifting& L, const Monomial& m) {
  Element out;
  for (const auto& [key, c] : L.hat_delta(m)) {
    Cyclotomic e = L.cleft().eps0(L.pi_E(key.first));
    if (!e.is_zero()) out.add_scaled(L.pi_B(key.second), c * e);
  }
  return out;
}

}  // namespace

std::pair<FreeElement, FreeElement> tau_split(const Lifting& L, const FreeElement& a) {
  FreeElement basis_part;
  for (const auto& [k, d] : L.pi_B(a)) basis_part.add(word_of(k), d);
  return {basis_part, a - basis_part};
}

Element pi_E_tau2(const Lifting& L, const Word& u) { return L.pi_E(u) - L.pi_B(u); }

Cyclotomic eps0_tau2(const Lifting& L, const Word& u) {
  return L.cleft().eps0(L.pi_E(u)) - L.pi_B(u).coefficient(Monomial{});
}

TensorElement coaction_rho(const Lifting& L, const Monomial& m) {
  return project_pair(L, L.hat_delta(m), false);
}

TensorElement coaction_rho(const Lifting& L, const Element& e) {
  TensorElement out;
  for (const auto& [m, c] : e) out.add_scaled(coaction_rho(L, m), c);
  return out;
}

bool check_H1(const Lifting& L, const Monomial& b) {
  TensorElement T = project_pair(L, L.hat_reduced_delta(b), true);
  TensorElement lhs;
  for (const auto& [key, t] : T)
    for (const auto& [e, c] : eps_rho(L, key.first)) lhs.add({e, key.second}, t * c);
  return lhs == T;
}

bool check_H2(const Lifting& L, const Monomial& b) {
  TensorElement total;
  for (const auto& [key, c] : L.hat_reduced_delta(b)) {
    Cyclotomic e = eps0_tau2(L, key.first);
    if (e.is_zero()) continue;
    for (const auto& [k, d] : L.pi_B(key.second))
      total.add_scaled(project_pair(L, L.hat_reduced_delta(k), true), c * e * d);
  }
  return total.is_zero();
}

Element section_general(const Lifting& L, const Monomial& b) {
  Element omega(b);
  for (const auto& [key, c] : L.hat_reduced_delta(b)) {
    Cyclotomic e = eps0_tau2(L, key.first);
    if (!e.is_zero()) omega.add_scaled(L.pi_B(key.second), -(c * e));
  }
  return omega;
}

Element section_generic_closed(const Lifting& L, const Monomial& b) {
  if (L.kind() != Case::Generic) throw Error("section_generic_closed needs the generic case");
  const int N = L.N();
  Element out(b);
  if (b.n12 + b.n1 < N || L.params().l1.is_zero()) return out;
  for (int k = 0; k <= b.n12; ++k) {
    int m = N - k;
    if (m < 0 || m > b.n1 || b.n2 + k >= N) continue;
    Cyclotomic c = coproduct_coeff(L.braiding(), b, 0, k, 0, m);
    out.add(Monomial{b.n2 + k, b.n12 - k, b.n1 - m}, -(L.params().l1 * c));
  }
  return out;
}

Element section_atypical_closed(const Lifting& L, const Monomial& b) {
  if (L.kind() != Case::Atypical) throw Error("section_atypical_closed needs the atypical case");
  const Braiding& br = L.braiding();
  const Cyclotomic& q = br.q();
  const Cyclotomic q2 = q * q;
  const Cyclotomic& l1 = L.params().l1;
  const Cyclotomic& l112 = L.params().l112;
  const Cyclotomic a = q2 - q;  // q^2 - q
  Element out(b);
  auto add = [&](int n2, int n12, int n1, const Cyclotomic& c) { out.add(Monomial{n2, n12, n1}, c); };
  const Monomial m = b;
  if (m == Monomial{0, 2, 0}) {
    add(1, 0, 0, -(a * l112));
  } else if (m == Monomial{0, 2, 1}) {
    add(2, 0, 0, Cyclotomic(3) * q2 * l1);
    add(1, 0, 1, -(a * l112));
  } else if (m == Monomial{0, 1, 2}) {
    add(1, 0, 0, -(a * l1));
  } else if (m == Monomial{1, 2, 0}) {
    add(2, 0, 0, -(a * l112));
  } else if (m == Monomial{1, 1, 2}) {
    add(2, 0, 0, -(a * l1));
  } else if (m == Monomial{1, 2, 1}) {
    add(2, 0, 1, -(a * l112));
  } else if (m == Monomial{0, 2, 2}) {
    add(2, 0, 1, -(Cyclotomic(3) * q * l1));
    add(1, 1, 0, a * l1);
    add(1, 0, 2, -(a * l112));
  } else if (m == Monomial{1, 2, 2}) {
    add(2, 1, 0, a * l1);
    add(2, 0, 2, -(a * l112));
  }
  return out;
}

SectionMap build_section(const Lifting& L) {
  SectionMap g;
  g.kind = L.kind();
  g.params = L.params();
  g.N = L.N();
  g.values.reserve(L.dim());
  bool ok = true;
  for (const auto& b : L.basis()) {
    g.values.push_back(section_general(L, b));
    ok = ok && check_H1(L, b) && check_H2(L, b);
  }
  g.verified = ok;
  return g;
}

bool verify_comodule(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures) {
  bool ok = true;
  for (const auto& b : L.basis()) {
    TensorElement lhs = coaction_rho(L, gamma(b));
    TensorElement rhs;
    for (const auto& [key, c] : L.delta(b))
      for (const auto& [e, ce] : gamma(key.first)) rhs.add({e, key.second}, c * ce);
    if (!(lhs == rhs)) {
      ok = false;
      if (failures) failures->push_back(b);
    }
  }
  return ok;
}

bool verify_counit(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures) {
  bool ok = true;
  for (const auto& b : L.basis()) {
    Cyclotomic expected = b.is_one() ? Cyclotomic(1) : Cyclotomic(0);
    if (!(L.cleft().eps0(gamma(b)) == expected)) {
      ok = false;
      if (failures) failures->push_back(b);
    }
  }
  return ok;
}

bool verify_h_linear(const Lifting& L, const SectionMap& gamma, std::vector<Monomial>* failures) {
  const auto gens = relation_weights(L.N(), L.params());
  bool ok = true;
  for (const auto& b : L.basis()) {
    bool good = true;
    for (const auto& [m, c] : gamma(b))
      if (!in_lattice(b.weight() - m.weight(), gens)) good = false;
    if (!good) {
      ok = false;
      if (failures) failures->push_back(b);
    }
  }
  return ok;
}

}  // namespace a2
