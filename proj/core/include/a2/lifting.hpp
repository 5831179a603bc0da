#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "a2/algebra.hpp"
#include "a2/braiding.hpp"
#include "a2/coproduct.hpp"

namespace a2 {

/// Everything fixed by a choice of (braiding, case, lambda): the Nichols
/// algebra, the cleft object, the ambient algebra the section is built from
/// (the distinguished pre-Nichols algebra in the generic case, T(V) in the
/// atypical case) and caches for the coproducts used downstream.
class Lifting {
public:
  Lifting(std::shared_ptr<const Braiding> braiding, Case kind, DeformationParams lambda,
          RealizationConstraints realization = {});

  static std::shared_ptr<Lifting> make(int N, long q_exp, long q12_exp, Case kind,
                                       DeformationParams lambda, unsigned order = 0,
                                       RealizationConstraints realization = {});

  const Braiding& braiding() const { return *braiding_; }
  std::shared_ptr<const Braiding> braiding_ptr() const { return braiding_; }
  Case kind() const { return kind_; }
  const DeformationParams& params() const { return lambda_; }
  const RealizationConstraints& realization() const { return realization_; }
  int N() const { return braiding_->N(); }
  int weight_modulus() const { return realization_.weight_modulus == 0 ? N() : realization_.weight_modulus; }

  const Algebra& nichols() const { return *nichols_; }
  const Algebra& cleft() const { return *cleft_; }
  const Algebra& pre_nichols() const { return *pre_nichols_; }
  std::shared_ptr<const Algebra> nichols_ptr() const { return nichols_; }
  std::shared_ptr<const Algebra> cleft_ptr() const { return cleft_; }

  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t index(const Monomial& m) const { return static_cast<std::size_t>(basis_index(m, N())); }

  /// The lift b~ of a basis element into the ambient algebra.
  FreeElement lift(const Monomial& b) const;
  /// Delta(b~) in the ambient algebra, legs written as words.
  const FreeTensor& hat_delta(const Monomial& b) const;
  /// Delta(b~) - b~ (x) 1 - 1 (x) b~.
  FreeTensor hat_reduced_delta(const Monomial& b) const;

  /// Projections of ambient elements to the Nichols algebra and to E.
  const Element& pi_B(const Word& w) const;
  const Element& pi_E(const Word& w) const;
  Element pi_B(const FreeElement& f) const;
  Element pi_E(const FreeElement& f) const;

  /// Nichols coproduct and its iterate, cached per basis element.
  const TensorElement& delta(const Monomial& b) const;
  const TripleTensorElement& delta2(const Monomial& b) const;

private:
  std::shared_ptr<const Braiding> braiding_;
  Case kind_;
  DeformationParams lambda_;
  RealizationConstraints realization_;
  std::shared_ptr<const Algebra> nichols_, cleft_, pre_nichols_;
  std::vector<Monomial> basis_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<Monomial, FreeTensor> hat_delta_;
  mutable std::map<Word, Element> pi_b_, pi_e_;
  mutable std::map<Monomial, TensorElement> delta_;
  mutable std::map<Monomial, TripleTensorElement> delta2_;
};

}  // namespace a2
