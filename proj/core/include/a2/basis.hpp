#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "a2/lincomb.hpp"

namespace a2 {

/// Letters of words. x12 is the composite letter produced by reordering.
/// The enumerator order is the PBW order x2 < x12 < x1.
enum class Letter : std::uint8_t { x2 = 0, x12 = 1, x1 = 2 };

using Word = std::vector<Letter>;

/// Letter counts: how many x1 and x2 an element is built from (x12 counts once for each).
struct Weight {
  int ones = 0;
  int twos = 0;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  Weight operator+(Weight o) const { return {ones + o.ones, twos + o.twos}; }
  Weight operator-(Weight o) const { return {ones - o.ones, twos - o.twos}; }
};

/// Exponent triple of x2^n2 x12^n12 x1^n1.
struct Monomial {
  int n2 = 0;
  int n12 = 0;
  int n1 = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  int degree() const { return n2 + 2 * n12 + n1; }
  Weight weight() const { return {n12 + n1, n2 + n12}; }
  bool is_one() const { return n2 == 0 && n12 == 0 && n1 == 0; }
  bool below(int bound) const { return n2 < bound && n12 < bound && n1 < bound; }
};

Weight weight_of(const Word& w);
int degree_of(const Word& w);

/// x2^n2 x12^n12 x1^n1 as a word with the composite letter.
Word word_of(const Monomial& m);

/// Word over {x1, x2} from a string such as "1122" (digits 1, 2).
Word parse_word(const std::string& digits);
std::string to_string(const Word& w);

/// "x2^2 x12 x1"; "1" for the empty monomial.
std::string to_string(const Monomial& m);

/// Parses "n2,n12,n1".
Monomial parse_monomial(const std::string& text);

/// All monomials with exponents < bound, lexicographic in (n2, n12, n1).
std::vector<Monomial> pbw_basis(int bound);

inline int basis_index(const Monomial& m, int N) { return (m.n2 * N + m.n12) * N + m.n1; }

Word concat(const Word& a, const Word& b);

using FreeElement = LinComb<Word>;

/// Concatenation product in T(V).
FreeElement free_mul(const FreeElement& a, const FreeElement& b);

}  // namespace a2
