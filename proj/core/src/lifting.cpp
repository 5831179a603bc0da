#include "a2/lifting.hpp"

namespace a2 {

Lifting::Lifting(std::shared_ptr<const Braiding> braiding, Case kind, DeformationParams lambda,
                 RealizationConstraints realization)
    : braiding_(std::move(braiding)), kind_(kind), lambda_(std::move(lambda)), realization_(realization) {
  if (!braiding_) throw Error("Lifting: null braiding");
  validate_params(*braiding_, kind_, lambda_, realization_);
  nichols_ = std::make_shared<Algebra>(braiding_, AlgebraKind::Nichols);
  cleft_ = std::make_shared<Algebra>(braiding_, AlgebraKind::Cleft, lambda_);
  pre_nichols_ = std::make_shared<Algebra>(braiding_, AlgebraKind::PreNichols);
  basis_ = pbw_basis(N());
}

std::shared_ptr<Lifting> Lifting::make(int N, long q_exp, long q12_exp, Case kind,
                                       DeformationParams lambda, unsigned order,
                                       RealizationConstraints realization) {
  auto b = std::make_shared<const Braiding>(N, q_exp, q12_exp, order);
  return std::make_shared<Lifting>(b, kind, std::move(lambda), realization);
}

FreeElement Lifting::lift(const Monomial& b) const { return FreeElement(word_of(b)); }

const FreeTensor& Lifting::hat_delta(const Monomial& b) const {
  std::lock_guard lock(mutex_);
  if (auto it = hat_delta_.find(b); it != hat_delta_.end()) return it->second;
  FreeTensor out;
  if (kind_ == Case::Generic) {
    for (const auto& [key, c] : delta_closed(*braiding_, b))
      out.add({word_of(key.first), word_of(key.second)}, c);
  } else {
    out = delta_free(*braiding_, word_of(b));
  }
  return hat_delta_.emplace(b, std::move(out)).first->second;
}

FreeTensor Lifting::hat_reduced_delta(const Monomial& b) const {
  FreeTensor out = hat_delta(b);
  if (b.is_one()) return {};
  // The primitive-like terms of the lift, written the same way hat_delta writes them.
  if (kind_ == Case::Generic) {
    out.add({word_of(b), Word{}}, Cyclotomic(-1));
    out.add({Word{}, word_of(b)}, Cyclotomic(-1));
  } else {
    for (const auto& [w, c] : expand_composites(*braiding_, word_of(b))) {
      out.add({w, Word{}}, -c);
      out.add({Word{}, w}, -c);
    }
  }
  return out;
}

const Element& Lifting::pi_B(const Word& w) const {
  std::lock_guard lock(mutex_);
  if (auto it = pi_b_.find(w); it != pi_b_.end()) return it->second;
  return pi_b_.emplace(w, nichols_->normal_form(w)).first->second;
}

const Element& Lifting::pi_E(const Word& w) const {
  std::lock_guard lock(mutex_);
  if (auto it = pi_e_.find(w); it != pi_e_.end()) return it->second;
  return pi_e_.emplace(w, cleft_->normal_form(w)).first->second;
}

Element Lifting::pi_B(const FreeElement& f) const {
  Element out;
  for (const auto& [w, c] : f) out.add_scaled(pi_B(w), c);
  return out;
}

Element Lifting::pi_E(const FreeElement& f) const {
  Element out;
  for (const auto& [w, c] : f) out.add_scaled(pi_E(w), c);
  return out;
}

const TensorElement& Lifting::delta(const Monomial& b) const {
  std::lock_guard lock(mutex_);
  if (auto it = delta_.find(b); it != delta_.end()) return it->second;
  return delta_.emplace(b, delta_nichols(*braiding_, b)).first->second;
}

const TripleTensorElement& Lifting::delta2(const Monomial& b) const {
  std::lock_guard lock(mutex_);
  if (auto it = delta2_.find(b); it != delta2_.end()) return it->second;
  TripleTensorElement out;
  for (const auto& [key, c] : delta(b))
    for (const auto& [inner, d] : delta(key.first))
      out.add({inner.first, inner.second, key.second}, c * d);
  return delta2_.emplace(b, std::move(out)).first->second;
}

}  // namespace a2
