#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace a2 {

using Rational = mpq_class;

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// Renders "p" or "p/q" (always reduced, denominator positive).
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q"; throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

unsigned euler_phi(unsigned n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// An element of Q(zeta_L) in canonical form.
///
/// The value is sum_i coeffs[i] * zeta_L^i, i < phi(L), which is the power
/// basis modulo the L-th cyclotomic polynomial. Elements of different orders
/// are combined by embedding both into Q(zeta_lcm).
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(Rational value) : order_(1), coeffs_{std::move(value)} {  // NOLINT
    coeffs_[0].canonicalize();
  }
  /// Reduces an arbitrary-length power-basis polynomial in zeta_order.
  Cyclotomic(unsigned order, std::vector<Rational> poly);

  /// zeta_order^exponent.
  static Cyclotomic root(unsigned order, long exponent);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Same value written over Q(zeta_target); target must be a multiple of order().
  Cyclotomic embed(unsigned target) const;

  Cyclotomic inv() const;
  Cyclotomic pow(long exponent) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inv(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical text over zeta, e.g. "3 + 3*z"; "0" for zero.
  std::string to_string(std::string_view var = "z") const;

private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace a2
