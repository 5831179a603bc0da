#include "a2/cocycle.hpp"

#include <map>

namespace a2 {

Functional::Functional(int N) : N_(N), values_(static_cast<std::size_t>(N) * N * N) {}

Functional Functional::epsilon(int N) {
  Functional f(N);
  f.set(Monomial{}, Cyclotomic(1));
  return f;
}

Cyclotomic Functional::apply(const Element& e) const {
  Cyclotomic out;
  for (const auto& [m, c] : e)
    if (m.below(N_) && !(*this)(m).is_zero()) out += c * (*this)(m);
  return out;
}

Bifunctional::Bifunctional(int N)
    : N_(N), dim_(static_cast<std::size_t>(N) * N * N), values_(dim_ * dim_) {}

Bifunctional Bifunctional::epsilon(int N) {
  Bifunctional f(N);
  f.set(Monomial{}, Monomial{}, Cyclotomic(1));
  return f;
}

Bifunctional& Bifunctional::operator+=(const Bifunctional& rhs) {
  if (rhs.N_ != N_) throw Error("Bifunctional: size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!rhs.values_[i].is_zero()) values_[i] += rhs.values_[i];
  return *this;
}

Bifunctional& Bifunctional::operator*=(const Cyclotomic& s) {
  for (auto& v : values_)
    if (!v.is_zero()) v *= s;
  return *this;
}

Cyclotomic sigma(const Lifting& L, const SectionMap& gamma, const Monomial& a, const Monomial& b) {
  Cyclotomic out;
  for (const auto& [ma, ca] : gamma(a))
    for (const auto& [mb, cb] : gamma(b)) {
      Cyclotomic e = L.cleft().eps0(L.cleft().mul(ma, mb));
      if (!e.is_zero()) out += ca * cb * e;
    }
  return out;
}

CocycleTable sigma_table(const Lifting& L, const SectionMap& gamma) {
  CocycleTable t{L.N(), L.kind(), L.params(), Bifunctional(L.N())};
  const auto& basis = L.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) t.values.set(i, j, sigma(L, gamma, basis[i], basis[j]));
  return t;
}

CocycleTable sigma_table(const Lifting& L) { return sigma_table(L, build_section(L)); }

namespace {

struct Term {
  std::size_t first, second;
  Weight second_weight;
  Cyclotomic coeff;
};

std::vector<std::vector<Term>> coproduct_terms(const Lifting& L) {
  std::vector<std::vector<Term>> out;
  for (const auto& b : L.basis()) {
    std::vector<Term> terms;
    for (const auto& [key, c] : L.delta(b))
      terms.push_back({L.index(key.first), L.index(key.second), key.second.weight(), c});
    out.push_back(std::move(terms));
  }
  return out;
}

}  // namespace

bool verify_reconstruction(const Lifting& L, const SectionMap& gamma, const CocycleTable& sigma,
                           std::vector<std::pair<Monomial, Monomial>>* failures) {
  const auto& basis = L.basis();
  const std::size_t n = basis.size();
  const auto terms = coproduct_terms(L);
  const Braiding& br = L.braiding();

  // Nonzero sigma entries by row.
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!sigma.values.at(i, j).is_zero()) support[i].push_back(j);

  std::map<std::pair<std::size_t, std::size_t>, Element> gamma_products;
  auto gamma_of_product = [&](std::size_t i, std::size_t j) -> const Element& {
    auto [it, inserted] = gamma_products.try_emplace({i, j});
    if (inserted)
      for (const auto& [m, c] : L.nichols().mul(basis[i], basis[j])) it->second.add_scaled(gamma(m), c);
    return it->second;
  };

  bool ok = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // Group the coproduct of b by its first leg.
      std::map<std::size_t, std::vector<const Term*>> by_first;
      for (const auto& t : terms[b]) by_first[t.first].push_back(&t);
      Element lhs;
      for (const auto& ta : terms[a])
        for (std::size_t b1 : support[ta.first]) {
          auto it = by_first.find(b1);
          if (it == by_first.end()) continue;
          const Cyclotomic& s = sigma.values.at(ta.first, b1);
          Cyclotomic braid = br.braid(ta.second_weight, basis[b1].weight());
          for (const Term* tb : it->second)
            lhs.add_scaled(gamma_of_product(ta.second, tb->second), ta.coeff * tb->coeff * s * braid);
        }
      Element rhs = L.cleft().mul(gamma(basis[a]), gamma(basis[b]));
      if (!(lhs == rhs)) {
        ok = false;
        if (failures) failures->emplace_back(basis[a], basis[b]);
      }
    }
  return ok;
}

Functional functional_convolve(const Lifting& L, const Functional& f, const Functional& g) {
  Functional out(L.N());
  for (const auto& b : L.basis()) {
    Cyclotomic v;
    for (const auto& [key, c] : L.delta(b)) {
      const Cyclotomic& x = f(key.first);
      if (x.is_zero()) continue;
      const Cyclotomic& y = g(key.second);
      if (!y.is_zero()) v += c * x * y;
    }
    out.set(b, v);
  }
  return out;
}

Functional functional_inverse(const Lifting& L, const Functional& f) {
  const Cyclotomic& f1 = f(Monomial{});
  if (f1.is_zero()) throw Error("functional_inverse: f(1) = 0, not invertible");
  // f = f(1)(eps - h) with h(1) = 0, so f^-1 = f(1)^-1 sum_k h^k.
  Cyclotomic inv1 = f1.inv();
  Functional h(L.N());
  for (const auto& b : L.basis())
    if (!b.is_one()) h.set(b, -(f(b) * inv1));
  Functional sum = Functional::epsilon(L.N());
  Functional power = Functional::epsilon(L.N());
  for (;;) {
    power = functional_convolve(L, power, h);
    bool zero = true;
    for (const auto& v : power.values()) zero = zero && v.is_zero();
    if (zero) break;
    for (const auto& b : L.basis()) sum.set(b, sum(b) + power(b));
  }
  Functional out(L.N());
  for (const auto& b : L.basis()) out.set(b, sum(b) * inv1);
  return out;
}

const std::array<Monomial, 8>& invariant_monomials() {
  static const std::array<Monomial, 8> list{Monomial{1, 1, 0}, Monomial{2, 0, 1}, Monomial{1, 0, 2},
                                            Monomial{0, 1, 1}, Monomial{2, 1, 2}, Monomial{1, 2, 1},
                                            Monomial{2, 2, 0}, Monomial{0, 2, 2}};
  return list;
}

Functional alpha_from_params(const Lifting& L, const std::array<Cyclotomic, 8>& c) {
  if (L.N() != 3) throw Error("alpha_from_params needs N = 3");
  Functional f = Functional::epsilon(3);
  for (std::size_t i = 0; i < 8; ++i) f.set(invariant_monomials()[i], c[i]);
  return f;
}

Functional alpha_inverse_closed(const Lifting& L, const std::array<Cyclotomic, 8>& c) {
  if (L.N() != 3) throw Error("alpha_inverse_closed needs N = 3");
  const Cyclotomic& q = L.braiding().q();
  const Cyclotomic d = q - q * q;  // q - q^2
  const Cyclotomic &a110 = c[0], &a201 = c[1], &a102 = c[2], &a011 = c[3];
  const Cyclotomic &a212 = c[4], &a121 = c[5], &a220 = c[6], &a022 = c[7];
  Functional f = Functional::epsilon(3);
  for (std::size_t i = 0; i < 4; ++i) f.set(invariant_monomials()[i], -c[i]);
  f.set(Monomial{2, 1, 2}, -a212 + a102 * a110 + a201 * (a011 + d * a102));
  f.set(Monomial{0, 2, 2}, -a022 + d * a011 * a102 + a011 * a011);
  f.set(Monomial{2, 2, 0}, -a220 + d * a201 * a110 + a110 * a110);
  f.set(Monomial{1, 2, 1},
        -a121 - Cyclotomic(3) * a201 * a102 + d * a201 * a011 + d * a102 * a110 + a110 * a011);
  return f;
}

Bifunctional convolve(const Lifting& L, const Bifunctional& F, const Bifunctional& G) {
  const auto& basis = L.basis();
  const std::size_t n = basis.size();
  const auto terms = coproduct_terms(L);
  const Braiding& br = L.braiding();
  Bifunctional out(L.N());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Cyclotomic v;
      for (const auto& tx : terms[x])
        for (const auto& ty : terms[y]) {
          const Cyclotomic& f = F.at(tx.first, ty.first);
          if (f.is_zero()) continue;
          const Cyclotomic& g = G.at(tx.second, ty.second);
          if (g.is_zero()) continue;
          v += tx.coeff * ty.coeff * f * g * br.braid(tx.second_weight, basis[ty.first].weight());
        }
      out.set(x, y, std::move(v));
    }
  return out;
}

Bifunctional outer(const Functional& f, const Functional& g) {
  if (f.N() != g.N()) throw Error("outer: size mismatch");
  Bifunctional out(f.N());
  const std::size_t n = f.values().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.at(i).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!g.at(j).is_zero()) out.set(i, j, f.at(i) * g.at(j));
  }
  return out;
}

Bifunctional compose_mul(const Lifting& L, const Functional& f) {
  const auto& basis = L.basis();
  Bifunctional out(L.N());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out.set(i, j, f.apply(L.nichols().mul(basis[i], basis[j])));
  return out;
}

CocycleTable orbit_act(const Lifting& L, const Functional& alpha, const CocycleTable& sigma) {
  if (alpha(Monomial{}).is_zero()) throw Error("orbit_act: alpha(1) = 0");
  Functional inv = functional_inverse(L, alpha);
  Bifunctional left = convolve(L, outer(alpha, alpha), sigma.values);
  CocycleTable out = sigma;
  out.values = convolve(L, left, compose_mul(L, inv));
  return out;
}

}  // namespace a2
