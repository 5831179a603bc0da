#include "a2/reference.hpp"

#include <map>

namespace a2::reference {

namespace {

const Monomial X2{1, 0, 0};
const Monomial X1{0, 0, 1};

// Both first rows, zero except at the given entries.
std::vector<Entry> rows(int N, const std::map<std::pair<Monomial, Monomial>, Cyclotomic>& listed) {
  std::vector<Entry> out;
  for (const Monomial& a : {X2, X1})
    for (const auto& b : pbw_basis(N)) {
      auto it = listed.find({a, b});
      out.push_back({a, b, it == listed.end() ? Cyclotomic(0) : it->second});
    }
  return out;
}

void require_atypical(const Braiding& br) {
  if (!br.is_atypical_matrix()) throw Error("reference table needs N = 3 and q12 = q21 = q");
}

}  // namespace

std::vector<Entry> generic_first_rows(const Braiding& br, const DeformationParams& l) {
  const int N = br.N();
  std::map<std::pair<Monomial, Monomial>, Cyclotomic> listed;
  listed[{X2, {N - 1, 0, 0}}] += l.l2;
  listed[{X1, {0, 0, N - 1}}] += l.l1;
  listed[{X1, {1, N - 1, 0}}] += l.l12;
  const Cyclotomic base = Cyclotomic(1) - br.q().pow(N - 1);
  for (int m = 1; m <= N - 1; ++m) {
    long e = static_cast<long>(N + m - 1) * (N - m) / 2;
    listed[{X2, {m - 1, N - m, m}}] += -(base.pow(N - m) * br.q21().pow(e) * l.l1 * l.l2);
  }
  return rows(N, listed);
}

std::vector<Entry> atypical_first_rows(const Braiding& br, const DeformationParams& l) {
  require_atypical(br);
  const Cyclotomic& q = br.q();
  const Cyclotomic q2 = q * q;
  const Cyclotomic d = q - q2;
  const Cyclotomic three(3);
  std::map<std::pair<Monomial, Monomial>, Cyclotomic> listed;
  listed[{X2, {2, 0, 0}}] = l.l2;
  listed[{X2, {1, 2, 0}}] = d * l.l2 * l.l112;
  listed[{X2, {1, 1, 2}}] = d * l.l2 * l.l1;
  listed[{X2, {0, 2, 1}}] = three * q2 * l.l2 * l.l1;
  listed[{X1, {2, 0, 0}}] = l.l122;
  listed[{X1, {0, 1, 0}}] = l.l112;
  listed[{X1, {0, 0, 2}}] = l.l1;
  listed[{X1, {1, 2, 0}}] = d * l.l112 * l.l122 + l.l12;
  listed[{X1, {1, 1, 2}}] = d * l.l1 * l.l122;
  listed[{X1, {0, 2, 1}}] = three * q2 * l.l1 * l.l122;
  return rows(3, listed);
}

const std::array<Monomial, 8>& first_row_columns() {
  static const std::array<Monomial, 8> cols{Monomial{2, 0, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 0},
                                            Monomial{0, 0, 2}, Monomial{2, 1, 1}, Monomial{1, 2, 0},
                                            Monomial{1, 1, 2}, Monomial{0, 2, 1}};
  return cols;
}

std::vector<Entry> orbit_increments(const Braiding& br, const DeformationParams& l,
                                    const std::array<Cyclotomic, 8>& alpha) {
  require_atypical(br);
  const Cyclotomic& q = br.q();
  const Cyclotomic q2 = q * q;
  const Cyclotomic d = q - q2;
  const Cyclotomic three(3), two(2), one(1);
  const Cyclotomic &a110 = alpha[0], &a201 = alpha[1], &a102 = alpha[2], &a011 = alpha[3];
  const Cyclotomic &a212 = alpha[4], &a121 = alpha[5], &a220 = alpha[6], &a022 = alpha[7];
  const auto& c = first_row_columns();
  std::vector<Entry> out;
  // Row x2; the x2^2 column carries no increment.
  out.push_back({X2, c[1], -a201});
  out.push_back({X2, c[2], -a110});
  out.push_back({X2, c[3], -a102});
  out.push_back({X2, c[4], d * (l.l2 * a102 + a201 * a110) + (q2 - one) * a201 * a201});
  out.push_back({X2, c[5], -(three * l.l2 * a102) + d * (l.l2 * a011 + a201 * a110) - q * a110 * a110 - a220});
  out.push_back({X2, c[6], -(a201 * (three * q2 * a102 + q * a011)) - q * a102 * a110 - a212});
  out.push_back({X2, c[7], a102 * (-(three * a201) + d * a110) - q2 * a110 * a011 - a121});
  // Row x1; the x1^2 column carries no increment.
  out.push_back({X1, c[0], -(q2 * a201) + a110});
  out.push_back({X1, c[1], -(q * a102) - a011});
  out.push_back({X1, c[2], -(q2 * a011)});
  out.push_back({X1, c[4], -d * (l.l112 * a201 - l.l122 * a102) + a201 * ((one - q) * a102 + two * q2 * a011) -
                               a110 * (a102 - q * a011) - q * a212 + a121});
  out.push_back({X1, c[5], d * (l.l112 * a110 + l.l122 * a011) - a102 * (three * l.l122 + (one - q2) * a110) +
                               two * q * a110 * a011 - q2 * a121});
  out.push_back({X1, c[6], -d * (l.l1 * a201 - l.l112 * a102) - a102 * ((one - q) * a102 + three * q2 * a011) -
                               q * a011 * a011 - a022});
  out.push_back({X1, c[7], three * l.l1 * a201 - d * l.l1 * a110 - d * l.l112 * a011 - q * a011 * a011 - q * a022});
  return out;
}

std::vector<Entry> exponential_first_rows(const Braiding& br, const std::array<Cyclotomic, 5>& e,
                                          const std::array<Cyclotomic, 8>& bv) {
  require_atypical(br);
  const Cyclotomic& q = br.q();
  const Cyclotomic q2 = q * q;
  const Cyclotomic &e1 = e[0], &e2 = e[1], &e12 = e[2], &e112 = e[3], &e122 = e[4];
  const Cyclotomic &b212 = bv[0], &b221 = bv[1], &b211 = bv[2], &b121 = bv[3];
  const Cyclotomic &b221211 = bv[4], &b212121 = bv[5], &b221212 = bv[6], &b121211 = bv[7];
  const auto& c = first_row_columns();
  return {
      {X2, c[0], e2},
      {X2, c[1], -b221},
      {X2, c[2], -b212},
      {X2, c[3], -b211},
      {X2, c[4], Cyclotomic(0)},
      {X2, c[5], -b221212},
      {X2, c[6], -b221211},
      {X2, c[7], -b212121},
      {X1, c[0], e122 - q2 * b221 + b212},
      {X1, c[1], -(q * b211) - b121},
      {X1, c[2], e112 - q2 * b121},
      {X1, c[3], e1},
      {X1, c[4], b212121 - q * b221211},
      {X1, c[5], e12 - q2 * b212121},
      {X1, c[6], -b121211},
      {X1, c[7], -(q * b121211)},
  };
}

std::array<Cyclotomic, 8> bvals_from_alpha(const Braiding& br, const DeformationParams& l,
                                           const std::array<Cyclotomic, 8>& a) {
  require_atypical(br);
  const Cyclotomic& q = br.q();
  const Cyclotomic q2 = q * q;
  const Cyclotomic r = q2 - q;
  const Cyclotomic three(3), one(1);
  const Cyclotomic &a212 = a[0], &a221 = a[1], &a211 = a[2], &a121 = a[3];
  const Cyclotomic &a221211 = a[4], &a212121 = a[5], &a221212 = a[6], &a121211 = a[7];
  const Cyclotomic &l1 = l.l1, &l2 = l.l2, &l112 = l.l112, &l122 = l.l122;
  std::array<Cyclotomic, 8> b;
  b[0] = a212;
  b[1] = a221;
  b[2] = a211;
  b[3] = a121;
  b[4] = a221211 + r * l2 * l1 + three * q2 * a221 * a211 + q * a221 * a121 + q * a211 * a212;
  b[5] = a212121 - three * q2 * l2 * l1 + three * a221 * a211 + r * a211 * a212 + q2 * a212 * a121;
  b[6] = a221212 + three * l2 * a211 + r * (l2 * l112 + l2 * a121 + a221 * a212) + q * a212 * a212;
  b[7] = a121211 + r * (l1 * l122 - l1 * a221 + l112 * a211) + three * q2 * a211 * a121 + q * a121 * a121 +
         (one - q) * a211 * a211;
  return b;
}

CaseBData case_b_data(const Braiding& br, const DeformationParams& l) {
  require_atypical(br);
  if (l.l112.is_zero() || l.l122.is_zero()) throw Error("case_b_data needs lambda112 lambda122 != 0");
  const Cyclotomic& q = br.q();
  const Cyclotomic third = Cyclotomic(Rational(1, 3));
  const Cyclotomic ninth = Cyclotomic(Rational(1, 9));
  const Cyclotomic d = q - q * q;
  CaseBData out;
  auto& a = out.alpha;
  a[1] = -(l.l122 * third);
  a[2] = -(l.l112 * third);
  a[0] = (q - Cyclotomic(1)) * l.l122 * third;
  a[3] = (q - Cyclotomic(1)) * l.l112 * third;
  a[4] = Cyclotomic(0);
  a[5] = (Cyclotomic(1) - q) * ninth * l.l112 * l.l122;
  a[6] = d * ninth * l.l122 * l.l122;
  a[7] = d * ninth * l.l112 * l.l112;
  out.bvals = bvals_from_alpha(br, l, a);
  return out;
}

}  // namespace a2::reference
