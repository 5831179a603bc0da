#pragma once

#include <array>
#include <vector>

#include "a2/braiding.hpp"

namespace a2::reference {

// Closed forms of the tabulated values, used as regression oracles for the computed tables.

struct Entry {
  Monomial a, b;
  Cyclotomic value;
};

/// sigma(x, b) for x in {x2, x1} and every basis b, generic case.
std::vector<Entry> generic_first_rows(const Braiding& br, const DeformationParams& l);

/// sigma(x, b) for x in {x2, x1} and every basis b; N = 3, q12 = q21 = q.
std::vector<Entry> atypical_first_rows(const Braiding& br, const DeformationParams& l);

/// Columns of the orbit and exponential tables, in order.
const std::array<Monomial, 8>& first_row_columns();

/// Increments T(x, b) = [alpha -> sigma](x, b) - sigma(x, b) for x in {x2, x1}
/// and b over first_row_columns(); alpha coefficients in the order of
/// invariant_monomials(). Unlisted entries are zero.
std::vector<Entry> orbit_increments(const Braiding& br, const DeformationParams& l,
                                    const std::array<Cyclotomic, 8>& alpha);

/// e^eta(x, b) for x in {x2, x1} and b over first_row_columns().
/// e = (e1, e2, e12, e112, e122); bvals are the coefficients of the
/// coboundaries beta_b in the order of invariant_monomials(), so the
/// coboundary part takes the value -bvals[i] at the pair of degree-one and
/// remaining factor listed for b_i, e.g. (x2, x12) for x2 x12.
std::vector<Entry> exponential_first_rows(const Braiding& br, const std::array<Cyclotomic, 5>& e,
                                          const std::array<Cyclotomic, 8>& bvals);

/// The invariant-unit coefficients and coboundary coefficients reached by the degree-3 and
/// degree-9 relations for parameters with lambda112 lambda122 != 0; the free
/// coefficient of x2^2 x12 x1^2 is zero.
struct CaseBData {
  std::array<Cyclotomic, 8> alpha;
  std::array<Cyclotomic, 8> bvals;
};
CaseBData case_b_data(const Braiding& br, const DeformationParams& l);

/// Coboundary coefficients from alpha coefficients and lambda by the degree-3/degree-9 relations.
std::array<Cyclotomic, 8> bvals_from_alpha(const Braiding& br, const DeformationParams& l,
                                           const std::array<Cyclotomic, 8>& alpha);

}  // namespace a2::reference
