#pragma once

#include <tuple>
#include <utility>

#include "a2/algebra.hpp"
#include "a2/basis.hpp"
#include "a2/braiding.hpp"
#include "a2/lincomb.hpp"

namespace a2 {

using TensorElement = Tensor<Monomial, Monomial>;
using TripleTensorElement = TripleTensor<Monomial, Monomial, Monomial>;
using FreeTensor = Tensor<Word, Word>;

/// C_(j,k,l,m) = B_(j,k,l,m) Q_(j,k,l,m) for the monomial n.
Cyclotomic coproduct_coeff(const Braiding& b, const Monomial& n, int j, int k, int l, int m);

/// Coproduct of x2^n2 x12^n12 x1^n1 in the distinguished pre-Nichols algebra.
TensorElement delta_closed(const Braiding& b, const Monomial& n);

/// Nichols coproduct: the closed form with every leg of exponent >= N dropped.
TensorElement delta_nichols(const Braiding& b, const Monomial& n);

/// x2^n2 (x1 x2 - q12 x2 x1)^n12 x1^n1 written over the letters x1, x2.
FreeElement lift_word(const Braiding& b, const Monomial& n);

/// Replaces each composite letter x12 by x1 x2 - q12 x2 x1.
FreeElement expand_composites(const Braiding& b, const Word& w);

/// Braided coproduct on T(V); composite letters are expanded first.
FreeTensor delta_free(const Braiding& b, const Word& w);
FreeTensor delta_free(const Braiding& b, const FreeElement& f);

/// (pi x pi) delta_free(w) for the algebra `alg`, computed letter by letter
/// so that long words stay cheap.
TensorElement delta_free_normalized(const Algebra& alg, const Word& w);

/// Closed coproduct of the T(V) lift for N = 3, q12 = q21 = q, n12 <= 2.
/// Left legs are words over {x2, x12, x1}; the extra term carries x112 as
/// x1 x12 - q q12 x12 x1. Equal to delta_free after projecting the right
/// leg to the Nichols algebra.
Tensor<Word, Monomial> delta_atypical(const Braiding& b, const Monomial& n);

/// The coefficient A(j, m) of the extra term.
Cyclotomic atypical_extra_coeff(const Braiding& b, const Monomial& n, int j, int m);

/// Delta(a) - a (x) 1 - 1 (x) a for a basis key `a` (zero when a is the unit).
template <class K>
Tensor<K, K> reduced_delta(Tensor<K, K> delta, const K& a, const K& unit) {
  if (a == unit) return {};
  delta.add({a, unit}, Cyclotomic(-1));
  delta.add({unit, a}, Cyclotomic(-1));
  return delta;
}

/// (Delta (x) id) Delta on the Nichols basis.
TripleTensorElement delta_two(const Braiding& b, const Monomial& n);
/// (id (x) Delta) Delta on the Nichols basis.
TripleTensorElement delta_two_right(const Braiding& b, const Monomial& n);

/// Product in the braided tensor square of `alg`:
/// (a (x) b)(c (x) d) = beta(b, c) ac (x) bd.
TensorElement tensor_mul(const Algebra& alg, const TensorElement& x, const TensorElement& y);

/// Applies `f` to each leg.
template <class A, class B, class FA, class FB>
auto map_legs(const Tensor<A, B>& t, FA&& fa, FB&& fb) {
  using KA = typename decltype(fa(std::declval<const A&>()))::key_type;
  using KB = typename decltype(fb(std::declval<const B&>()))::key_type;
  Tensor<KA, KB> out;
  for (const auto& [key, c] : t) {
    auto left = fa(key.first);
    if (left.is_zero()) continue;
    auto right = fb(key.second);
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
  }
  return out;
}

}  // namespace a2
