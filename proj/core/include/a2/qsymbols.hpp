#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "a2/cyclotomic.hpp"

namespace a2 {

// q-combinatorics over any commutative ring constructible from long
// (Cyclotomic for roots of unity, a polynomial type for symbolic q).

/// (n)_q = 1 + q + ... + q^{n-1}
template <class Ring>
Ring q_int(unsigned n, const Ring& q) {
  Ring sum(0);
  Ring power(1);
  for (unsigned i = 0; i < n; ++i) {
    sum += power;
    power = power * q;
  }
  return sum;
}

template <class Ring>
Ring q_factorial(unsigned n, const Ring& q) {
  Ring result(1);
  for (unsigned i = 1; i <= n; ++i) result = result * q_int(i, q);
  return result;
}

/// Rows 0..n of the Gaussian binomial triangle, built with
/// binom(n+1,k) = binom(n,k-1) + q^k binom(n,k). Never divides, so it is
/// valid at roots of unity where (N)!_q vanishes.
template <class Ring>
std::vector<std::vector<Ring>> q_binomial_rows(unsigned n, const Ring& q) {
  std::vector<Ring> qpow{Ring(1)};
  for (unsigned k = 1; k <= n; ++k) qpow.push_back(qpow.back() * q);
  std::vector<std::vector<Ring>> rows;
  rows.push_back({Ring(1)});
  for (unsigned m = 0; m < n; ++m) {
    const auto& prev = rows.back();
    std::vector<Ring> next(m + 2, Ring(0));
    next[0] = Ring(1);
    next[m + 1] = Ring(1);
    for (unsigned k = 1; k <= m; ++k) next[k] = prev[k - 1] + qpow[k] * prev[k];
    rows.push_back(std::move(next));
  }
  return rows;
}

/// Throws Error when k > n.
template <class Ring>
Ring q_binom(unsigned n, unsigned k, const Ring& q) {
  if (k > n) throw Error("q_binom: k > n");
  return q_binomial_rows(n, q)[n][k];
}

/// Memoised Gaussian binomials for a fixed q; grows on demand.
class QBinomialTable {
public:
  explicit QBinomialTable(Cyclotomic q) : q_(std::move(q)) {}
  const Cyclotomic& q() const { return q_; }
  const Cyclotomic& operator()(unsigned n, unsigned k) const;

private:
  Cyclotomic q_;
  // A deque so references handed out stay valid while the table grows.
  mutable std::deque<std::vector<Cyclotomic>> rows_;
  mutable std::mutex mutex_;
};

}  // namespace a2
