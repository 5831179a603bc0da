#include <doctest.h>

#include "a2/algebra.hpp"
#include "generators.hpp"

using namespace a2;

namespace {

std::shared_ptr<const Braiding> braiding(int N, long q12 = 1) {
  return std::make_shared<const Braiding>(N, 1, q12);
}

}  // namespace

TEST_SUITE("braiding") {
  TEST_CASE("q must have order N") {
    CHECK_NOTHROW(Braiding(3, 1, 1));
    CHECK_THROWS_AS(Braiding(4, 2, 1), Error);
    CHECK_THROWS_AS(Braiding(2, 1, 1), Error);
    CHECK_THROWS_AS(Braiding(4, 1, 1, 6), Error);
    CHECK_NOTHROW(Braiding(3, 2, 1, 6));
  }

  TEST_CASE("q12 q21 = q^-1") {
    for (int N : {3, 4, 5})
      for (long q12 = 0; q12 < N; ++q12) {
        Braiding b(N, 1, q12);
        CHECK(b.q12() * b.q21() * b.q() == Cyclotomic(1));
      }
  }

  TEST_CASE("braid scalar is bimultiplicative") {
    Braiding b(5, 2, 3);
    Weight u{2, 1}, v{1, 3}, w{4, 0};
    CHECK(b.braid(u + v, w) == b.braid(u, w) * b.braid(v, w));
    CHECK(b.braid(u, v + w) == b.braid(u, v) * b.braid(u, w));
    CHECK(b.braid({1, 0}, {0, 1}) == b.q12());
    CHECK(b.braid({0, 1}, {1, 0}) == b.q21());
  }

  TEST_CASE("atypical matrix detection") {
    CHECK(Braiding(3, 1, 1).is_atypical_matrix());
    CHECK(Braiding(3, 2, 2).is_atypical_matrix());
    CHECK_FALSE(Braiding(3, 1, 2).is_atypical_matrix());
    CHECK_FALSE(Braiding(4, 1, 1).is_atypical_matrix());
  }

  TEST_CASE("parameter validation") {
    RealizationConstraints r;
    CHECK_THROWS_AS(validate_params(Braiding(4, 1, 1), Case::Generic, {0, 0, 0, 1, 0}, r), Error);
    CHECK_THROWS_AS(validate_params(Braiding(4, 1, 1), Case::Atypical, {}, r), Error);
    CHECK_NOTHROW(validate_params(Braiding(3, 1, 1), Case::Atypical, {1, 1, 1, 1, 1}, r));
    CHECK_NOTHROW(validate_params(Braiding(4, 1, 3), Case::Generic, {1, 1, 1, 0, 0}, r));
    // q12 = zeta_6 has q12^3 = -1, so the power deformations are not allowed.
    CHECK_THROWS_AS(validate_params(Braiding(3, 2, 1, 6), Case::Generic, {1, 0, 0, 0, 0}, r), Error);
    CHECK_NOTHROW(validate_params(Braiding(3, 2, 1, 6), Case::Generic, {}, r));
    RealizationConstraints no_chi1;
    no_chi1.chi1_N_trivial = false;
    CHECK_THROWS_AS(validate_params(Braiding(3, 1, 1), Case::Generic, {1, 0, 0, 0, 0}, no_chi1), Error);
    CHECK_NOTHROW(validate_params(Braiding(3, 1, 1), Case::Generic, {0, 1, 0, 0, 0}, no_chi1));
  }

  TEST_CASE("relation lattice") {
    CHECK(in_lattice({3, 0}, relation_weights(3, {1, 0, 0, 0, 0})));
    CHECK_FALSE(in_lattice({3, 0}, relation_weights(3, {0, 1, 0, 0, 0})));
    CHECK(in_lattice({1, -1}, relation_weights(3, {0, 0, 0, 1, 1})));
    CHECK(in_lattice({0, 0}, {}));
    CHECK_FALSE(in_lattice({2, 1}, {}));
  }
}

TEST_SUITE("algebra") {
  TEST_CASE("generator relations in the cleft object") {
    auto b = braiding(3);
    Algebra E(b, AlgebraKind::Cleft, {2, 3, 5, 7, 11});
    const Cyclotomic& q = b->q();
    CHECK(E.normal_form(Word{Letter::x1, Letter::x2}) ==
          Element(Monomial{1, 0, 1}, b->q12()) + Element(Monomial{0, 1, 0}));
    CHECK(E.normal_form(Word{Letter::x1, Letter::x12}) ==
          Element(Monomial{0, 1, 1}, q * b->q12()) + Element(Monomial{}, Cyclotomic(7)));
    CHECK(E.normal_form(Word{Letter::x12, Letter::x2}) ==
          Element(Monomial{1, 1, 0}, q * b->q12()) + Element(Monomial{}, Cyclotomic(11)));
    CHECK(E.normal_form(Word(3, Letter::x1)) == Element(Monomial{}, Cyclotomic(2)));
    CHECK(E.normal_form(Word(3, Letter::x2)) == Element(Monomial{}, Cyclotomic(3)));
    CHECK(E.normal_form(Word(3, Letter::x12)) == Element(Monomial{}, Cyclotomic(5)));
  }

  TEST_CASE("contexts") {
    auto b = braiding(3);
    CHECK_THROWS_AS(Algebra(b, AlgebraKind::Nichols, {1, 0, 0, 0, 0}), Error);
    Algebra F(b, AlgebraKind::Free);
    CHECK_THROWS_AS(F.normal_form(Word{Letter::x1}), Error);
    auto n = std::make_shared<const Algebra>(b, AlgebraKind::Nichols);
    auto e = std::make_shared<const Algebra>(b, AlgebraKind::Cleft, DeformationParams{1, 0, 0, 0, 0});
    AlgebraElement x{n, Element(Monomial{0, 0, 1})}, y{e, Element(Monomial{0, 0, 1})};
    CHECK_THROWS_AS(mul(x, y), Error);
    CHECK(mul(x, x).terms == Element(Monomial{0, 0, 2}));
  }

  TEST_CASE("the x1^N power vanishes in the Nichols algebra but not in the pre-Nichols algebra") {
    auto b = braiding(4);
    Algebra B(b, AlgebraKind::Nichols), P(b, AlgebraKind::PreNichols);
    CHECK(B.normal_form(Word(4, Letter::x1)).is_zero());
    CHECK(P.normal_form(Word(4, Letter::x1)) == Element(Monomial{0, 0, 4}));
  }

  TEST_CASE("confluence of the atypical rewriting system on words of length <= 8") {
    testing::Gen gen(7);
    auto b = braiding(3);
    auto lambda = gen.atypical_params();
    Algebra E(b, AlgebraKind::Cleft, lambda);
    Algebra B(b, AlgebraKind::Nichols);
    Algebra P(b, AlgebraKind::PreNichols);
    std::size_t words = 0, bad = 0;
    for_each_word(8, [&](const Word& w) {
      ++words;
      if (!locally_confluent(E, w)) ++bad;
      if (!(rewrite_word(E, w) == E.normal_form(w))) ++bad;
      if (w.size() <= 6) {
        if (!locally_confluent(B, w) || !locally_confluent(P, w)) ++bad;
        if (!(rewrite_word(P, w) == P.normal_form(w))) ++bad;
      }
    });
    CHECK(words == 9841);
    CHECK(bad == 0);
  }

  TEST_CASE("confluence for generic braidings") {
    testing::Gen gen(8);
    for (int N : {3, 4})
      for (long q12 : {1L, 2L}) {
        auto b = braiding(N, q12);
        Algebra E(b, AlgebraKind::Cleft, gen.generic_params());
        std::size_t bad = 0;
        for_each_word(6, [&](const Word& w) {
          if (!locally_confluent(E, w)) ++bad;
        });
        CHECK(bad == 0);
      }
  }

  TEST_CASE("associativity of the cleft product") {
    testing::Gen gen(9);
    auto b = braiding(3);
    Algebra E(b, AlgebraKind::Cleft, gen.atypical_params());
    auto basis = pbw_basis(3);
    for (int t = 0; t < 200; ++t) {
      const auto& x = basis[gen.integer(0, 26)];
      const auto& y = basis[gen.integer(0, 26)];
      const auto& z = basis[gen.integer(0, 26)];
      Element xy = E.mul(Element(x), Element(y));
      Element yz = E.mul(Element(y), Element(z));
      CHECK(E.mul(xy, Element(z)) == E.mul(Element(x), yz));
    }
  }

  TEST_CASE("closed product and eps0 table agree with rewriting") {
    testing::Gen gen(10);
    for (int N : {3, 4, 5})
      for (long q12 : {1L, 3L}) {
        if (q12 >= N) continue;
        auto b = braiding(N, q12);
        Algebra E(b, AlgebraKind::Cleft, gen.generic_params());
        Algebra B(b, AlgebraKind::Nichols);
        auto basis = pbw_basis(N);
        std::size_t bad = 0;
        for (const auto& x : basis)
          for (const auto& y : basis) {
            const Element& prod = E.mul(x, y);
            if (!(mul_closed_generic(E, x, y) == prod)) ++bad;
            if (!(eps0_closed(E, x, y) == E.eps0(prod))) ++bad;
            if (!(mul_closed_generic(B, x, y) == B.mul(x, y))) ++bad;
          }
        CHECK(bad == 0);
        for (int t = 0; t < 40; ++t) {
          const auto& x = basis[gen.integer(0, static_cast<int>(basis.size()) - 1)];
          const auto& y = basis[gen.integer(0, static_cast<int>(basis.size()) - 1)];
          CHECK(rewrite_word(E, concat(word_of(x), word_of(y))) == E.mul(x, y));
        }
      }
  }

  TEST_CASE("commutation formula") {
    auto b = braiding(5, 2);
    Algebra P(b, AlgebraKind::PreNichols);
    for (int n1 = 0; n1 < 5; ++n1)
      for (int m2 = 0; m2 < 5; ++m2)
        CHECK(commute_x1n_x2m(P, n1, m2) == P.mul(Monomial{0, 0, n1}, Monomial{m2, 0, 0}));
  }

  TEST_CASE("rewrite_step rejects positions without a redex") {
    auto b = braiding(3);
    Algebra B(b, AlgebraKind::Nichols);
    Word w{Letter::x2, Letter::x1};
    CHECK(leftmost_redex(B, w) == -1);
    CHECK_THROWS_AS(rewrite_step(B, w, 0), Error);
  }
}
