#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "a2/basis.hpp"
#include "a2/braiding.hpp"
#include "a2/lincomb.hpp"

namespace a2 {

enum class AlgebraKind { Free, PreNichols, Nichols, Cleft };

std::string to_string(AlgebraKind k);

/// Linear combination of PBW monomials y2^a y12^b y1^c.
using Element = LinComb<Monomial>;

/// One of T(V), the distinguished pre-Nichols algebra, the Nichols algebra
/// or a cleft object E_lambda, all over a fixed braiding.
///
/// Products are computed by memoised left multiplication by a single
/// letter; the caches make the object cheap to query repeatedly and are
/// guarded so one instance can be shared between threads.
class Algebra {
public:
  Algebra(std::shared_ptr<const Braiding> braiding, AlgebraKind kind,
          DeformationParams lambda = {});

  AlgebraKind kind() const { return kind_; }
  const Braiding& braiding() const { return *braiding_; }
  std::shared_ptr<const Braiding> braiding_ptr() const { return braiding_; }
  const DeformationParams& params() const { return lambda_; }
  int N() const { return braiding_->N(); }

  /// Exponents are bounded by N (Nichols and cleft objects).
  bool bounded() const { return power_rules_; }

  // Right-hand sides of the rewriting rules in this context.
  const Cyclotomic& mu112() const { return mu112_; }
  const Cyclotomic& mu122() const { return mu122_; }
  const Cyclotomic& nu(Letter l) const;
  bool power_rules() const { return power_rules_; }

  /// letter * y_m in normal form.
  const Element& left_mul(Letter l, const Monomial& m) const;

  Element mul(const Element& a, const Element& b) const;
  const Element& mul(const Monomial& a, const Monomial& b) const;

  Element normal_form(const Word& w) const;
  Element normal_form(const FreeElement& f) const;

  /// Coefficient of the empty monomial.
  Cyclotomic eps0(const Element& a) const;

  /// Monomials reachable in this context: all exponents < N when bounded.
  bool admissible(const Monomial& m) const { return !power_rules_ || m.below(N()); }

private:
  void require_rules() const;
  Element apply_letter(Letter l, const Element& e) const;

  std::shared_ptr<const Braiding> braiding_;
  AlgebraKind kind_;
  DeformationParams lambda_;
  Cyclotomic mu112_, mu122_, nu1_, nu2_, nu12_;
  bool power_rules_ = false;
  Cyclotomic qq12_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Letter, Monomial>, Element> letter_cache_;
  mutable std::map<std::pair<Monomial, Monomial>, Element> product_cache_;
};

/// Element tagged with the algebra it lives in.
struct AlgebraElement {
  std::shared_ptr<const Algebra> algebra;
  Element terms;
};

/// Product of tagged elements; throws Error when the contexts differ.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

/// Leftmost-innermost rewriting of a word with the rules of `alg`, kept as
/// an independent oracle for the memoised product.
Element rewrite_word(const Algebra& alg, const Word& w);

/// Position of the leftmost redex, or -1 when w is a normal word.
int leftmost_redex(const Algebra& alg, const Word& w);

/// All positions where some rule applies.
std::vector<int> redex_positions(const Algebra& alg, const Word& w);

/// One rewriting step at position `pos`; throws Error if no rule applies there.
LinComb<Word> rewrite_step(const Algebra& alg, const Word& w, int pos);

/// Every one-step rewrite of w has the same normal form as w.
bool locally_confluent(const Algebra& alg, const Word& w);

/// Calls f on every word in x2, x12, x1 of length <= max_len, shortest first.
void for_each_word(int max_len, const std::function<void(const Word&)>& f);

/// y1^n1 y2^m2 by the closed commutation formula (quantum Serre relations hold).
Element commute_x1n_x2m(const Algebra& alg, int n1, int m2);

/// L_(n1, s, m2) = binom(n1,s) binom(m2,s) (s)! q12^(m2 n1 - s(s+1)/2).
Cyclotomic commutation_coeff(const Braiding& b, int n1, int s, int m2);

/// y_n * y_m by the closed product formula with powers y^N reduced.
Element mul_closed_generic(const Algebra& alg, const Monomial& n, const Monomial& m);

/// eps0(y_n y_m) from the five-constraint table.
Cyclotomic eps0_closed(const Algebra& alg, const Monomial& n, const Monomial& m);

}  // namespace a2
