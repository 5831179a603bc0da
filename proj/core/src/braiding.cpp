#include "a2/braiding.hpp"

#include <cstdlib>
#include <numeric>

namespace a2 {

const Cyclotomic& QBinomialTable::operator()(unsigned n, unsigned k) const {
  if (k > n) throw Error("q_binom: k > n");
  std::lock_guard lock(mutex_);
  if (n >= rows_.size()) {
    auto rows = q_binomial_rows(n + 4, q_);
    for (std::size_t i = rows_.size(); i < rows.size(); ++i) rows_.push_back(std::move(rows[i]));
  }
  return rows_[n][k];
}

std::string to_string(Case c) { return c == Case::Generic ? "generic" : "atypical"; }

Case parse_case(const std::string& text) {
  if (text == "generic") return Case::Generic;
  if (text == "atypical") return Case::Atypical;
  throw Error("unknown case \"" + text + "\" (expected generic or atypical)");
}

Braiding::Braiding(int N, long q_exp, long q12_exp, unsigned order)
    : N_(N), L_(order == 0 ? static_cast<unsigned>(N) : order) {
  if (N < 3) throw Error("N must be at least 3");
  if (L_ % static_cast<unsigned>(N) != 0)
    throw Error("field order " + std::to_string(L_) + " is not a multiple of N = " +
                std::to_string(N));
  q_exp_ = reduce_exp(q_exp);
  q12_exp_ = reduce_exp(q12_exp);
  q21_exp_ = reduce_exp(-q_exp_ - q12_exp_);
  long L = static_cast<long>(L_);
  if (L / std::gcd(L, q_exp_ == 0 ? L : q_exp_) != N)
    throw Error("q = zeta_" + std::to_string(L_) + "^" + std::to_string(q_exp) +
                " is not a primitive " + std::to_string(N) + "-th root of unity");
  auto powers = std::make_shared<std::vector<Cyclotomic>>();
  powers->reserve(L_);
  for (unsigned e = 0; e < L_; ++e) powers->push_back(Cyclotomic::root(L_, e));
  powers_ = std::move(powers);
  binom_ = std::make_shared<QBinomialTable>(zeta(q_exp_));
}

long Braiding::reduce_exp(long e) const {
  long L = static_cast<long>(L_);
  e %= L;
  return e < 0 ? e + L : e;
}

const Cyclotomic& Braiding::zeta(long e) const { return (*powers_)[reduce_exp(e)]; }

long Braiding::braid_exp(Weight u, Weight v) const {
  long e = q_exp_ * (static_cast<long>(u.ones) * v.ones + static_cast<long>(u.twos) * v.twos) +
           q12_exp_ * static_cast<long>(u.ones) * v.twos +
           q21_exp_ * static_cast<long>(u.twos) * v.ones;
  return reduce_exp(e);
}

bool Braiding::is_atypical_matrix() const {
  return N_ == 3 && q12_exp_ == q_exp_ && q21_exp_ == q_exp_;
}

void validate_params(const Braiding& b, Case c, const DeformationParams& p,
                     const RealizationConstraints& r) {
  int N = b.N();
  if (c == Case::Atypical) {
    if (N != 3) throw Error("the atypical case requires N = 3");
    if (!b.is_atypical_matrix()) throw Error("the atypical case requires q12 = q21 = q");
  } else if (p.serre_deformed()) {
    throw Error("lambda112 and lambda122 must vanish in the generic case");
  }
  if (p.serre_deformed() && !b.is_atypical_matrix())
    throw Error("lambda112 or lambda122 nonzero requires N = 3 and q12 = q21 = q");

  bool q12_N_trivial = b.reduce_exp(static_cast<long>(N) * b.q12_exp()) == 0;
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(what);
  };
  if (!p.l1.is_zero()) {
    need(q12_N_trivial, "lambda1 nonzero requires q12^N = 1");
    need(r.chi1_N_trivial, "lambda1 nonzero requires chi1^N = 1 in the realization");
  }
  if (!p.l2.is_zero()) {
    need(q12_N_trivial, "lambda2 nonzero requires q12^N = 1");
    need(r.chi2_N_trivial, "lambda2 nonzero requires chi2^N = 1 in the realization");
  }
  if (!p.l12.is_zero()) {
    need(q12_N_trivial, "lambda12 nonzero requires q12^N = 1");
    need(r.chi1chi2_N_trivial, "lambda12 nonzero requires (chi1 chi2)^N = 1 in the realization");
  }
  if (!p.l112.is_zero())
    need(r.chi1sq_chi2_trivial, "lambda112 nonzero requires chi1^2 chi2 = 1 in the realization");
  if (!p.l122.is_zero())
    need(r.chi1_chi2sq_trivial, "lambda122 nonzero requires chi1 chi2^2 = 1 in the realization");
}

std::vector<Weight> relation_weights(int N, const DeformationParams& p) {
  std::vector<Weight> out;
  if (!p.l1.is_zero()) out.push_back({N, 0});
  if (!p.l2.is_zero()) out.push_back({0, N});
  if (!p.l12.is_zero()) out.push_back({N, N});
  if (!p.l112.is_zero()) out.push_back({2, 1});
  if (!p.l122.is_zero()) out.push_back({1, 2});
  return out;
}

bool in_lattice(Weight diff, const std::vector<Weight>& gens) {
  // Echelon form {(a, b), (0, c)} by Euclid on the first coordinate.
  long a = 0, b = 0, c = 0;
  for (Weight g : gens) {
    long x = g.ones, y = g.twos;
    while (x != 0) {
      long k = a / x;
      a -= k * x;
      b -= k * y;
      std::swap(a, x);
      std::swap(b, y);
    }
    c = std::gcd(c, y);
  }
  long dx = diff.ones, dy = diff.twos;
  if (a == 0) {
    if (dx != 0) return false;
  } else {
    if (dx % a != 0) return false;
    dy -= (dx / a) * b;
  }
  return c == 0 ? dy == 0 : dy % c == 0;
}

}  // namespace a2
