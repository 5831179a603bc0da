#include "a2/coproduct.hpp"

namespace a2 {

Cyclotomic coproduct_coeff(const Braiding& b, const Monomial& n, int j, int k, int l, int m) {
  const auto& binom = b.qbinom();
  Cyclotomic out = binom(n.n2, j) * binom(n.n12, k) * binom(k, l) * binom(n.n1, m);
  if (k > l) out *= (Cyclotomic(1) - b.zeta(-b.q_exp())).pow(k - l);
  long e21 = static_cast<long>(n.n2 - j) * (k + m) + static_cast<long>(m) * (n.n12 - l) +
             static_cast<long>(k - l - 1) * (k - l) / 2;
  long eq = static_cast<long>(n.n2 - j) * l + static_cast<long>(m) * (n.n12 - k);
  return out * b.zeta(b.q21_exp() * e21 + b.q_exp() * eq);
}

TensorElement delta_closed(const Braiding& b, const Monomial& n) {
  TensorElement out;
  for (int j = 0; j <= n.n2; ++j)
    for (int k = 0; k <= n.n12; ++k)
      for (int l = 0; l <= k; ++l)
        for (int m = 0; m <= n.n1; ++m) {
          Monomial left{j, l, k + m - l};
          Monomial right{n.n2 + k - j - l, n.n12 - k, n.n1 - m};
          out.add({left, right}, coproduct_coeff(b, n, j, k, l, m));
        }
  return out;
}

TensorElement delta_nichols(const Braiding& b, const Monomial& n) {
  const int N = b.N();
  if (!n.below(N)) throw Error("delta_nichols: " + to_string(n) + " is not a Nichols basis element");
  TensorElement out;
  for (const auto& [key, c] : delta_closed(b, n))
    if (key.first.below(N) && key.second.below(N)) out.add(key, c);
  return out;
}

FreeElement expand_composites(const Braiding& b, const Word& w) {
  FreeElement out{Word{}};
  const FreeElement x12 = [&] {
    FreeElement e;
    e.add({Letter::x1, Letter::x2}, 1);
    e.add({Letter::x2, Letter::x1}, -b.q12());
    return e;
  }();
  for (Letter l : w) {
    if (l == Letter::x12) {
      out = free_mul(out, x12);
    } else {
      FreeElement next;
      for (const auto& [u, c] : out) {
        Word v = u;
        v.push_back(l);
        next.add(v, c);
      }
      out = std::move(next);
    }
  }
  return out;
}

FreeElement lift_word(const Braiding& b, const Monomial& n) {
  return expand_composites(b, word_of(n));
}

FreeTensor delta_free(const Braiding& b, const Word& w) {
  FreeTensor out;
  for (const auto& [u, c] : expand_composites(b, w)) {
    // Right to left: (x (x) 1 + 1 (x) x)(a (x) b) = xa (x) b + beta(x, a) a (x) xb.
    FreeTensor acc;
    acc.add({Word{}, Word{}}, 1);
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      Letter x = *it;
      Weight wx = weight_of(Word{x});
      FreeTensor next;
      for (const auto& [key, coeff] : acc) {
        Word left = key.first;
        left.insert(left.begin(), x);
        next.add({left, key.second}, coeff);
        Word right = key.second;
        right.insert(right.begin(), x);
        next.add({key.first, right}, coeff * b.braid(wx, weight_of(key.first)));
      }
      acc = std::move(next);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

FreeTensor delta_free(const Braiding& b, const FreeElement& f) {
  FreeTensor out;
  for (const auto& [w, c] : f) out.add_scaled(delta_free(b, w), c);
  return out;
}

TensorElement delta_free_normalized(const Algebra& alg, const Word& w) {
  if (alg.kind() == AlgebraKind::Free || alg.kind() == AlgebraKind::Cleft)
    throw Error("delta_free_normalized needs a graded quotient (pre-Nichols or Nichols)");
  const Braiding& b = alg.braiding();
  TensorElement out;
  for (const auto& [u, c] : expand_composites(b, w)) {
    TensorElement acc;
    acc.add({Monomial{}, Monomial{}}, 1);
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      Letter x = *it;
      Weight wx = weight_of(Word{x});
      TensorElement next;
      for (const auto& [key, coeff] : acc) {
        for (const auto& [m, cm] : alg.left_mul(x, key.first)) next.add({m, key.second}, coeff * cm);
        Cyclotomic braid = coeff * b.braid(wx, key.first.weight());
        for (const auto& [m, cm] : alg.left_mul(x, key.second)) next.add({key.first, m}, braid * cm);
      }
      acc = std::move(next);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

Cyclotomic atypical_extra_coeff(const Braiding& b, const Monomial& n, int j, int m) {
  const auto& binom = b.qbinom();
  Cyclotomic out = (Cyclotomic(1) - b.zeta(2 * b.q_exp())) * b.zeta(-b.q12_exp()) *
                   binom(n.n2, j) * binom(n.n1, m);
  long e = b.q_exp() * static_cast<long>(n.n2 - j) +
           b.q21_exp() * (static_cast<long>(n.n2 - j) * (m + 2) + m);
  return out * b.zeta(e);
}

Tensor<Word, Monomial> delta_atypical(const Braiding& b, const Monomial& n) {
  if (!b.is_atypical_matrix()) throw Error("delta_atypical needs N = 3 and q12 = q21 = q");
  if (n.n12 > 2) throw Error("delta_atypical is only defined for n12 <= 2");
  Tensor<Word, Monomial> out;
  for (const auto& [key, c] : delta_closed(b, n)) out.add({word_of(key.first), key.second}, c);
  if (n.n12 < 2) return out;
  Cyclotomic qq12 = b.zeta(b.q_exp() + b.q12_exp());
  for (int j = 0; j <= n.n2; ++j)
    for (int m = 0; m <= n.n1; ++m) {
      Cyclotomic a = atypical_extra_coeff(b, n, j, m);
      Monomial right{n.n2 - j + 1, 0, n.n1 - m};
      Word prefix(j, Letter::x2);
      Word suffix(m, Letter::x1);
      Word first = prefix, second = prefix;
      first.insert(first.end(), {Letter::x1, Letter::x12});
      second.insert(second.end(), {Letter::x12, Letter::x1});
      first.insert(first.end(), suffix.begin(), suffix.end());
      second.insert(second.end(), suffix.begin(), suffix.end());
      out.add({first, right}, a);
      out.add({second, right}, -a * qq12);
    }
  return out;
}

TripleTensorElement delta_two(const Braiding& b, const Monomial& n) {
  TripleTensorElement out;
  for (const auto& [key, c] : delta_nichols(b, n))
    for (const auto& [inner, d] : delta_nichols(b, key.first))
      out.add({inner.first, inner.second, key.second}, c * d);
  return out;
}

TripleTensorElement delta_two_right(const Braiding& b, const Monomial& n) {
  TripleTensorElement out;
  for (const auto& [key, c] : delta_nichols(b, n))
    for (const auto& [inner, d] : delta_nichols(b, key.second))
      out.add({key.first, inner.first, inner.second}, c * d);
  return out;
}

TensorElement tensor_mul(const Algebra& alg, const TensorElement& x, const TensorElement& y) {
  const Braiding& b = alg.braiding();
  TensorElement out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Cyclotomic c = cx * cy * b.braid(kx.second.weight(), ky.first.weight());
      const Element& left = alg.mul(kx.first, ky.first);
      if (left.is_zero()) continue;
      const Element& right = alg.mul(kx.second, ky.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
    }
  return out;
}

}  // namespace a2
