#include <doctest.h>

#include "a2/section.hpp"
#include "generators.hpp"

using namespace a2;

namespace {

void check_lifting(const Lifting& L) {
  std::size_t closed_bad = 0, h1_bad = 0, h2_bad = 0;
  for (const auto& b : L.basis()) {
    Element g = section_general(L, b);
    Element c = L.kind() == Case::Generic ? section_generic_closed(L, b) : section_atypical_closed(L, b);
    if (!(g == c)) ++closed_bad;
    if (!check_H1(L, b)) ++h1_bad;
    if (!check_H2(L, b)) ++h2_bad;
  }
  CHECK(closed_bad == 0);
  CHECK(h1_bad == 0);
  CHECK(h2_bad == 0);
  SectionMap gamma = build_section(L);
  CHECK(gamma.verified);
  CHECK(verify_comodule(L, gamma));
  CHECK(verify_counit(L, gamma));
  CHECK(verify_h_linear(L, gamma));
  CHECK(gamma(Monomial{}) == Element(Monomial{}));
}

}  // namespace

TEST_SUITE("section") {
  TEST_CASE("generic sections for N = 3, 4, 5") {
    testing::Gen gen(31);
    for (int N : {3, 4, 5})
      for (long q12 : {1L, 2L}) {
        CAPTURE(N);
        CAPTURE(q12);
        auto L = Lifting::make(N, 1, q12, Case::Generic, gen.generic_params());
        check_lifting(*L);
      }
  }

  TEST_CASE("atypical sections") {
    testing::Gen gen(32);
    for (long qe : {1L, 2L}) {
      auto L = Lifting::make(3, qe, qe, Case::Atypical, gen.atypical_params());
      check_lifting(*L);
      auto ones = Lifting::make(3, qe, qe, Case::Atypical, {1, 1, 1, 1, 1});
      check_lifting(*ones);
    }
  }

  TEST_CASE("trivial deformation gives the plain lift") {
    auto L = Lifting::make(4, 1, 1, Case::Generic, {});
    SectionMap gamma = build_section(*L);
    for (const auto& b : L->basis()) CHECK(gamma(b) == Element(b));
    CHECK(verify_comodule(*L, gamma));
  }

  TEST_CASE("closed-form examples") {
    auto L = Lifting::make(3, 1, 1, Case::Atypical, {2, 3, 5, 7, 11});
    const Cyclotomic& q = L->braiding().q();
    Element e = Element(Monomial{0, 2, 0});
    e.add(Monomial{1, 0, 0}, -(q * q - q) * Cyclotomic(7));
    CHECK(section_general(*L, {0, 2, 0}) == e);
    CHECK(section_general(*L, {1, 1, 0}) == Element(Monomial{1, 1, 0}));
    CHECK(section_general(*L, {0, 0, 1}) == Element(Monomial{0, 0, 1}));

    auto G = Lifting::make(3, 1, 2, Case::Generic, {2, 0, 0, 0, 0});
    const Braiding& br = G->braiding();
    Element g = Element(Monomial{0, 2, 1});
    g.add(Monomial{2, 0, 0},
          -(Cyclotomic(2) * (Cyclotomic(1) - br.q().inv()).pow(2) * br.q21().pow(3)));
    CHECK(section_generic_closed(*G, {0, 2, 1}) == g);
    CHECK(section_generic_closed(*G, {1, 0, 1}) == Element(Monomial{1, 0, 1}));
  }

  TEST_CASE("coaction on generators") {
    auto L = Lifting::make(4, 1, 3, Case::Generic, {1, 1, 1, 0, 0});
    TensorElement r1;
    r1.add({{0, 0, 1}, {}}, 1);
    r1.add({{}, {0, 0, 1}}, 1);
    CHECK(coaction_rho(*L, Monomial{0, 0, 1}) == r1);
    TensorElement r12;
    r12.add({{0, 1, 0}, {}}, 1);
    r12.add({{0, 0, 1}, {1, 0, 0}}, Cyclotomic(1) - L->braiding().q().inv());
    r12.add({{}, {0, 1, 0}}, 1);
    CHECK(coaction_rho(*L, Monomial{0, 1, 0}) == r12);
    TensorElement r0;
    r0.add({{}, {}}, 1);
    CHECK(coaction_rho(*L, Monomial{}) == r0);
  }

  TEST_CASE("tau splitting") {
    auto G = Lifting::make(3, 1, 1, Case::Generic, {1, 0, 0, 0, 0});
    auto [t1, t2] = tau_split(*G, FreeElement(Word(3, Letter::x1)));
    CHECK(t1.is_zero());
    CHECK(t2 == FreeElement(Word(3, Letter::x1)));
    auto [s1, s2] = tau_split(*G, G->lift({1, 1, 1}));
    CHECK(s1 == G->lift({1, 1, 1}));
    CHECK(s2.is_zero());

    auto A = Lifting::make(3, 1, 1, Case::Atypical, {1, 1, 1, 1, 1});
    FreeElement x112;
    x112.add({Letter::x1, Letter::x12}, 1);
    x112.add({Letter::x12, Letter::x1}, -(A->braiding().q() * A->braiding().q12()));
    auto [u1, u2] = tau_split(*A, x112);
    CHECK(u1.is_zero());
    CHECK(u2 == x112);
    CHECK(A->pi_B(u2).is_zero());
  }

  TEST_CASE("coaction is independent of the representative") {
    auto L = Lifting::make(3, 1, 1, Case::Atypical, {1, 2, 3, 4, 5});
    // x1 x12 and qq12 x12 x1 + lambda112 represent the same element of E.
    Word w{Letter::x1, Letter::x12};
    TensorElement via_word;
    for (const auto& [key, c] : delta_free(L->braiding(), w))
      for (const auto& [l, cl] : L->pi_E(key.first))
        for (const auto& [r, cr] : L->pi_B(key.second)) via_word.add({l, r}, c * cl * cr);
    CHECK(via_word == coaction_rho(*L, L->pi_E(w)));
  }
}
