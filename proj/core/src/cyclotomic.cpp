#include "a2/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace a2 {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    v = b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<long> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size() - 1; i + 1 > dd; --i) {
      long c = poly[i];
      quot[i - dd] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
      if (i == dd) break;
    }
    poly = std::move(quot);
  }
  return poly;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Remainder modulo the monic integer polynomial `m`; result has length deg(m).
Poly reduce_mod(Poly p, const std::vector<long>& m) {
  std::size_t deg = m.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (m[j] != 0) p[i - deg + j] -= c * m[j];
  }
  p.resize(deg);
  return p;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{Rational(0)}, a};
  Poly q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b[db];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db == 0 ? 1 : db);
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly out(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::make_unique<std::vector<long>>(std::move(poly)));
  return *it->second;
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> poly) : order_(order) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  if (poly.empty()) poly.emplace_back(0);
  for (auto& c : poly) c.canonicalize();
  coeffs_ = reduce_mod(std::move(poly), cyclotomic_polynomial(order));
}

Cyclotomic Cyclotomic::root(unsigned order, long exponent) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  long e = exponent % static_cast<long>(order);
  if (e < 0) e += order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[e] = 1;
  return Cyclotomic(order, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::embed(unsigned target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw Error("cannot embed Q(zeta_" + std::to_string(order_) +
                                        ") into Q(zeta_" + std::to_string(target) + ")");
  unsigned step = target / order_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return Cyclotomic(target, std::move(poly));
}

namespace {
unsigned common_order(unsigned a, unsigned b) { return std::lcm(a, b); }
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    unsigned m = common_order(order_, rhs.order_);
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    unsigned m = common_order(order_, rhs.order_);
    *this = embed(m);
    return *this -= rhs.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    // Rationals scale coefficientwise without leaving the larger field.
    if (a.order_ == 1 || b.order_ == 1) {
      const Cyclotomic& r = a.order_ == 1 ? a : b;
      Cyclotomic out = a.order_ == 1 ? b : a;
      for (auto& c : out.coeffs_) c *= r.coeffs_[0];
      return out;
    }
    unsigned m = common_order(a.order_, b.order_);
    return a.embed(m) * b.embed(m);
  }
  if (a.order_ == 1) return Cyclotomic(Rational(a.coeffs_[0] * b.coeffs_[0]));
  std::vector<Rational> poly(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Cyclotomic out;
  out.order_ = a.order_;
  out.coeffs_ = reduce_mod(std::move(poly), cyclotomic_polynomial(a.order_));
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    unsigned m = common_order(a.order_, b.order_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
  // Extended Euclid: s * a == gcd (mod Phi), gcd is a nonzero constant.
  const auto& phi = cyclotomic_polynomial(order_);
  Poly r0(phi.begin(), phi.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (!poly_is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return Cyclotomic(order_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Cyclotomic::to_string(std::string_view var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string() << " [Q(z" << c.order() << ")]";
}

}  // namespace a2
