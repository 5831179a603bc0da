#pragma once

#include <memory>
#include <string>
#include <vector>

#include "a2/basis.hpp"
#include "a2/cyclotomic.hpp"
#include "a2/qsymbols.hpp"

namespace a2 {

enum class Case { Generic, Atypical };

std::string to_string(Case c);
Case parse_case(const std::string& text);

/// Diagonal braiding of Cartan type A2: q11 = q22 = q, q12 * q21 = q^-1.
///
/// Every scalar is a power of zeta_L. q = zeta_L^q_exp must have order
/// exactly N; q21 is determined by q and q12.
class Braiding {
public:
  /// order == 0 selects L = N.
  Braiding(int N, long q_exp, long q12_exp, unsigned order = 0);

  int N() const { return N_; }
  unsigned order() const { return L_; }
  long q_exp() const { return q_exp_; }
  long q12_exp() const { return q12_exp_; }
  long q21_exp() const { return q21_exp_; }

  const Cyclotomic& q() const { return zeta(q_exp_); }
  const Cyclotomic& q12() const { return zeta(q12_exp_); }
  const Cyclotomic& q21() const { return zeta(q21_exp_); }

  /// zeta_L^e for any integer e.
  const Cyclotomic& zeta(long e) const;
  long reduce_exp(long e) const;

  /// Exponent of the scalar picked up when u moves left past v:
  /// (1 (x) u)(v (x) 1) = zeta^e (v (x) u), e = sum q_ij^{u_i v_j}.
  long braid_exp(Weight u, Weight v) const;
  const Cyclotomic& braid(Weight u, Weight v) const { return zeta(braid_exp(u, v)); }

  const QBinomialTable& qbinom() const { return *binom_; }

  /// q12 = q21 = q with N = 3, the only braiding whose Serre relations deform.
  bool is_atypical_matrix() const;

private:
  int N_;
  unsigned L_;
  long q_exp_, q12_exp_, q21_exp_;
  std::shared_ptr<const std::vector<Cyclotomic>> powers_;
  std::shared_ptr<QBinomialTable> binom_;
};

struct DeformationParams {
  Cyclotomic l1, l2, l12, l112, l122;

  bool serre_deformed() const { return !l112.is_zero() || !l122.is_zero(); }
  bool is_zero() const {
    return l1.is_zero() && l2.is_zero() && l12.is_zero() && !serre_deformed();
  }
  friend bool operator==(const DeformationParams&, const DeformationParams&) = default;
};

/// Character data of the realization at the level the computations use:
/// which products of characters are trivial. Defaults admit every parameter.
struct RealizationConstraints {
  bool chi1_N_trivial = true;
  bool chi2_N_trivial = true;
  bool chi1chi2_N_trivial = true;
  bool chi1sq_chi2_trivial = true;
  bool chi1_chi2sq_trivial = true;
  int weight_modulus = 0;  // 0 means N
};

/// Throws Error with a diagnostic when lambda is not admissible for the
/// braiding, the chosen case and the realization flags.
void validate_params(const Braiding& b, Case c, const DeformationParams& p,
                     const RealizationConstraints& r);

/// Letter-count vectors of the relations whose parameter is nonzero.
std::vector<Weight> relation_weights(int N, const DeformationParams& p);

/// True when `diff` lies in the lattice spanned by `gens`.
bool in_lattice(Weight diff, const std::vector<Weight>& gens);

}  // namespace a2
