#include <doctest.h>

#include "a2/cyclotomic.hpp"
#include "a2/qsymbols.hpp"
#include "generators.hpp"

using namespace a2;

namespace {

// Gaussian binomial as an integer polynomial in q, by the subset-inversion count.
std::vector<long> gaussian_poly(unsigned n, unsigned k) {
  std::vector<long> poly(k * (n - k) + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    unsigned inv = 0, ones = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) ++ones;
      else inv += ones;
    }
    ++poly[inv];
  }
  return poly;
}

Cyclotomic eval(const std::vector<long>& poly, const Cyclotomic& q) {
  Cyclotomic out, p(1);
  for (long c : poly) {
    out += Cyclotomic(c) * p;
    p = p * q;
  }
  return out;
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("field axioms on random elements") {
    testing::Gen gen(11);
    for (unsigned L : {3u, 4u, 5u, 6u, 12u}) {
      for (int trial = 0; trial < 20; ++trial) {
        Cyclotomic a = gen.cyclotomic(L), b = gen.cyclotomic(L), c = gen.cyclotomic(L);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Cyclotomic(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Cyclotomic(1));
      }
    }
  }

  TEST_CASE("roots of unity") {
    for (unsigned L : {3u, 4u, 5u, 7u, 9u, 12u}) {
      Cyclotomic z = Cyclotomic::root(L, 1);
      CHECK(z.pow(static_cast<long>(L)) == Cyclotomic(1));
      Cyclotomic sum;
      for (unsigned i = 0; i < L; ++i) sum += z.pow(i);
      CHECK(sum.is_zero());
      CHECK(z.pow(-1) * z == Cyclotomic(1));
    }
  }

  TEST_CASE("mixed orders embed into the lcm field") {
    Cyclotomic w = Cyclotomic::root(3, 1);
    Cyclotomic i = Cyclotomic::root(4, 1);
    Cyclotomic z12 = Cyclotomic::root(12, 1);
    CHECK(w * i == z12.pow(7));
    CHECK(Cyclotomic::root(6, 2) == w);
    CHECK((w + i).order() == 12);
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Cyclotomic(0).inv(), DivisionByZero);
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
  }

  TEST_CASE("q-binomials agree with the inversion-count oracle") {
    for (unsigned L : {3u, 4u, 5u}) {
      Cyclotomic q = Cyclotomic::root(L, 1);
      QBinomialTable table(q);
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(table(n, k) == eval(gaussian_poly(n, k), q));
    }
  }

  TEST_CASE("Pascal identities up to n = 12") {
    for (unsigned L : {3u, 4u, 5u, 7u}) {
      Cyclotomic q = Cyclotomic::root(L, 1);
      auto rows = q_binomial_rows(12, q);
      for (unsigned n = 0; n < 12; ++n)
        for (unsigned k = 1; k <= n; ++k) {
          CHECK(rows[n + 1][k] == rows[n][k - 1] + q.pow(k) * rows[n][k]);
          CHECK(rows[n + 1][k] == q.pow(n + 1 - k) * rows[n][k - 1] + rows[n][k]);
        }
    }
  }

  TEST_CASE("q-binomials vanish at the root of unity") {
    for (unsigned N : {3u, 4u, 5u}) {
      Cyclotomic q = Cyclotomic::root(N, 1);
      for (unsigned k = 1; k < N; ++k) CHECK(q_binom(N, k, q).is_zero());
      CHECK(q_factorial(N, q).is_zero());
      CHECK(q_int(N, q).is_zero());
    }
  }
}
