#pragma once

#include <array>
#include <utility>
#include <vector>

#include "a2/section.hpp"

namespace a2 {

/// Linear functional on the Nichols algebra, dense over the PBW basis.
class Functional {
public:
  Functional() = default;
  explicit Functional(int N);
  static Functional epsilon(int N);

  int N() const { return N_; }
  const Cyclotomic& operator()(const Monomial& b) const { return values_[index(b)]; }
  const Cyclotomic& at(std::size_t i) const { return values_[i]; }
  void set(const Monomial& b, Cyclotomic v) { values_[index(b)] = std::move(v); }
  const std::vector<Cyclotomic>& values() const { return values_; }

  /// Applied linearly to an element.
  Cyclotomic apply(const Element& e) const;

  friend bool operator==(const Functional&, const Functional&) = default;

private:
  std::size_t index(const Monomial& b) const { return static_cast<std::size_t>(basis_index(b, N_)); }
  int N_ = 0;
  std::vector<Cyclotomic> values_;
};

/// Bilinear form on the Nichols algebra, dense over pairs of basis elements.
class Bifunctional {
public:
  Bifunctional() = default;
  explicit Bifunctional(int N);
  /// eps (x) eps, the unit for convolution.
  static Bifunctional epsilon(int N);

  int N() const { return N_; }
  std::size_t dim() const { return dim_; }
  const Cyclotomic& operator()(const Monomial& a, const Monomial& b) const { return values_[index(a, b)]; }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  void set(const Monomial& a, const Monomial& b, Cyclotomic v) { values_[index(a, b)] = std::move(v); }
  void set(std::size_t i, std::size_t j, Cyclotomic v) { values_[i * dim_ + j] = std::move(v); }
  const std::vector<Cyclotomic>& values() const { return values_; }

  Bifunctional& operator+=(const Bifunctional& rhs);
  Bifunctional& operator*=(const Cyclotomic& s);
  friend Bifunctional operator+(Bifunctional a, const Bifunctional& b) { return a += b; }
  friend Bifunctional operator*(Bifunctional a, const Cyclotomic& s) { return a *= s; }
  friend bool operator==(const Bifunctional&, const Bifunctional&) = default;

private:
  std::size_t index(const Monomial& a, const Monomial& b) const {
    return static_cast<std::size_t>(basis_index(a, N_)) * dim_ + static_cast<std::size_t>(basis_index(b, N_));
  }
  int N_ = 0;
  std::size_t dim_ = 0;
  std::vector<Cyclotomic> values_;
};

struct CocycleTable {
  int N = 0;
  Case kind = Case::Generic;
  DeformationParams params;
  Bifunctional values;

  const Cyclotomic& operator()(const Monomial& a, const Monomial& b) const { return values(a, b); }
};

/// sigma(a, b) = eps0(gamma(a) gamma(b)).
Cyclotomic sigma(const Lifting& L, const SectionMap& gamma, const Monomial& a, const Monomial& b);

CocycleTable sigma_table(const Lifting& L, const SectionMap& gamma);
CocycleTable sigma_table(const Lifting& L);

/// sum sigma(a1, b1) gamma(a2 b2) = gamma(a) gamma(b) on every basis pair.
bool verify_reconstruction(const Lifting& L, const SectionMap& gamma, const CocycleTable& sigma,
                           std::vector<std::pair<Monomial, Monomial>>* failures = nullptr);

/// (f * g)(b) = f(b1) g(b2).
Functional functional_convolve(const Lifting& L, const Functional& f, const Functional& g);
/// Throws Error when f(1) = 0.
Functional functional_inverse(const Lifting& L, const Functional& f);

/// Monomials carrying the free coefficients of an invariant unit, in order.
const std::array<Monomial, 8>& invariant_monomials();

/// eps + sum c_i delta_{b_i} over invariant_monomials(); needs N = 3.
Functional alpha_from_params(const Lifting& L, const std::array<Cyclotomic, 8>& c);
/// Closed form of the convolution inverse of alpha_from_params(c).
Functional alpha_inverse_closed(const Lifting& L, const std::array<Cyclotomic, 8>& c);

/// (F * G)(x, y) = beta(x2, y1) F(x1, y1) G(x2, y2), the convolution dual to
/// the braided tensor square coalgebra.
Bifunctional convolve(const Lifting& L, const Bifunctional& F, const Bifunctional& G);

/// (x, y) -> f(x) g(y).
Bifunctional outer(const Functional& f, const Functional& g);
/// (x, y) -> f(xy), product in the Nichols algebra.
Bifunctional compose_mul(const Lifting& L, const Functional& f);

/// alpha -> sigma(x, y) = alpha(x1) alpha(y1) sigma(x2, y2) alpha^-1(x3 y3).
CocycleTable orbit_act(const Lifting& L, const Functional& alpha, const CocycleTable& sigma);

}  // namespace a2
