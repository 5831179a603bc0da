#include <doctest.h>

#include "a2/hochschild.hpp"
#include "a2/reference.hpp"
#include "generators.hpp"

using namespace a2;

namespace {

std::shared_ptr<Lifting> atypical(DeformationParams l, long qe = 1) {
  return Lifting::make(3, qe, qe, Case::Atypical, std::move(l));
}

}  // namespace

TEST_SUITE("hochschild") {
  TEST_CASE("basis cocycles are cocycles but not coboundaries") {
    auto L = atypical({});
    auto eta = eta_basis(*L);
    for (const auto& e : eta) {
      CHECK(check_hochschild_cocycle(*L, e));
      CHECK_FALSE(is_coboundary(*L, e));
    }
    for (const auto& b : invariant_monomials()) {
      auto beta = beta_coboundary(*L, b);
      CHECK(check_hochschild_cocycle(*L, beta));
      CHECK(is_coboundary(*L, beta));
    }
    CHECK(check_hochschild_cocycle(*L, Bifunctional(3)));
  }

  TEST_CASE("a broken bifunctional fails the cocycle check") {
    auto L = atypical({});
    Bifunctional bad(3);
    bad.set(Monomial{0, 0, 1}, Monomial{0, 0, 2}, Cyclotomic(1));
    CHECK_FALSE(check_hochschild_cocycle(*L, bad));
  }

  TEST_CASE("basis values") {
    auto L = atypical({});
    auto eta = eta_basis(*L);
    CHECK(eta[2](Monomial{0, 1, 0}, Monomial{0, 2, 0}) == Cyclotomic(1));
    CHECK(eta[2](Monomial{0, 2, 1}, Monomial{1, 0, 0}) == Cyclotomic(1));
    CHECK(eta[3](Monomial{0, 0, 1}, Monomial{0, 1, 0}) == Cyclotomic(1));
    CHECK(eta[3](Monomial{1, 0, 0}, Monomial{0, 1, 0}).is_zero());
    CHECK(beta_coboundary(*L, {1, 1, 0})(Monomial{1, 0, 0}, Monomial{0, 1, 0}) == Cyclotomic(-1));
    CHECK(beta_coboundary(*L, {2, 0, 1})(Monomial{1, 0, 0}, Monomial{1, 0, 1}) == Cyclotomic(-1));
    CHECK(beta_coboundary(*L, {2, 0, 1})(Monomial{}, Monomial{2, 0, 1}).is_zero());
    CHECK_THROWS_AS(beta_coboundary(*L, {1, 0, 0}), Error);
  }

  TEST_CASE("eta12 is the x12^3 coefficient of the pre-Nichols product") {
    for (long qe : {1L, 2L}) {
      auto L = atypical({}, qe);
      auto eta = eta_basis(*L);
      for (const auto& r : L->basis())
        for (const auto& s : L->basis()) {
          if (r.is_one() || s.is_one()) continue;
          CHECK(eta[2](r, s) == L->pre_nichols().mul(r, s).coefficient(Monomial{0, 3, 0}));
          CHECK(eta[0](r, s) == L->pre_nichols().mul(r, s).coefficient(Monomial{0, 0, 3}));
          CHECK(eta[1](r, s) == L->pre_nichols().mul(r, s).coefficient(Monomial{3, 0, 0}));
        }
    }
  }

  TEST_CASE("exponential first rows match the reference rows") {
    testing::Gen gen(51);
    auto L = atypical({});
    for (int trial = 0; trial < 4; ++trial) {
      HochschildCocycle h;
      std::array<Cyclotomic, 8> bvals;
      for (auto& x : h.e) x = gen.rational();
      for (auto& x : bvals) x = gen.rational();
      h.beta = bvals;
      auto e5 = exponential(*L, to_bifunctional(*L, h), 5);
      for (const auto& e : reference::exponential_first_rows(L->braiding(), h.e, bvals)) {
        CAPTURE(to_string(e.a));
        CAPTURE(to_string(e.b));
        CHECK(e5(e.a, e.b) == e.value);
      }
      CHECK(e5 == exponential(*L, to_bifunctional(*L, h), 6));
      CHECK(e5(Monomial{}, Monomial{}) == Cyclotomic(1));
    }
  }

  TEST_CASE("purity conditions") {
    Braiding br(3, 1, 1);
    CHECK(purity_condition_a({1, 0, 0, 0, 0}));
    CHECK(purity_condition_a({}));
    CHECK_FALSE(purity_condition_a({1, 1, 0, 0, 0}));
    CHECK_FALSE(purity_condition_a({0, 0, 0, 1, 0}));
    const Cyclotomic& q = br.q();
    DeformationParams b{Rational(1, 3), Rational(1, 3), (q * q - q) / Cyclotomic(3), 1, 1};
    CHECK(purity_condition_b(br, b));
    b.l12 = 0;
    CHECK_FALSE(purity_condition_b(br, b));
  }

  TEST_CASE("classification with verified witnesses") {
    for (const DeformationParams& l :
         {DeformationParams{1, 0, 0, 0, 0}, DeformationParams{0, 1, 0, 0, 0}, DeformationParams{0, 0, 1, 0, 0}}) {
      auto v = classify_purity(*atypical(l));
      CHECK(v.tag == Purity::Exponential);
      CHECK(v.condition == 'a');
      CHECK(v.verified);
    }
    for (const DeformationParams& l :
         {DeformationParams{1, 1, 0, 0, 0}, DeformationParams{0, 0, 0, 1, 0}, DeformationParams{0, 0, 0, 0, 1}}) {
      auto v = classify_purity(*atypical(l));
      CHECK(v.tag == Purity::Pure);
      CHECK_FALSE(v.witness.has_value());
    }
    for (long qe : {1L, 2L}) {
      Braiding br(3, qe, qe);
      const Cyclotomic& q = br.q();
      for (auto [x, y] : {std::pair{1, 1}, std::pair{2, -3}}) {
        Cyclotomic l112(x), l122(y), three(3);
        DeformationParams l{l112 * l112 / (three * l122), l122 * l122 / (three * l112),
                            (q * q - q) * l112 * l122 / three, l112, l122};
        auto v = classify_purity(*atypical(l, qe));
        CHECK(v.tag == Purity::Exponential);
        CHECK(v.condition == 'b');
        CHECK(v.verified);
      }
    }
  }

  TEST_CASE("witness shape for the case (b) parameters") {
    auto L0 = atypical({});
    const Cyclotomic& q = L0->braiding().q();
    Cyclotomic three(3);
    DeformationParams l{Rational(1, 3), Rational(1, 3), (q * q - q) / three, 1, 1};
    auto L = atypical(l);
    auto w = witness_construct(*L);
    CHECK(w.alpha[1] == Cyclotomic(Rational(-1, 3)));
    CHECK(w.alpha[0] == (q - Cyclotomic(1)) / three);
    CHECK(w.eta.e[2].is_zero());
    const auto& c = w.eta.beta;
    CHECK(c[0] == (q - Cyclotomic(1)) / three);
    CHECK(c[3] == c[0]);
    CHECK(c[1] == Cyclotomic(Rational(-1, 3)));
    CHECK(c[2] == c[1]);
    // kappa = b221211 is the coefficient of beta at x2^2 x12 x1^2.
    const Cyclotomic& kappa = c[4];
    CHECK(c[6] == kappa);
    CHECK(c[7] == kappa);
    CHECK(c[5] == q * kappa);
    CHECK_THROWS_AS(witness_construct(*atypical({1, 1, 0, 0, 0})), Error);
  }
}
