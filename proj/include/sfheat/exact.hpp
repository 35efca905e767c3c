#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "sfheat/errors.hpp"

namespace sfheat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Exact scalar of the form q * sqrt(pi)^e with rational q and e in {0, 1}.
///
/// Half-integer Gamma values carry a single sqrt(pi); nothing in this library
/// ever multiplies two sqrt(pi)-carrying scalars, and multiplication enforces
/// that instead of folding pi into the rational part.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(Rational q, int sqrtpi_power = 0);

  const Rational& rational() const noexcept { return q_; }
  int sqrtpi_power() const noexcept { return sqrtpi_; }
  bool is_zero() const noexcept { return q_ == 0; }

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.q_ == b.q_ && (a.q_ == 0 || a.sqrtpi_ == b.sqrtpi_);
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Numeric value, sqrt(pi) factor included.
  double to_double() const;

  /// "p/q" or "p/q*sqrt(pi)".
  std::string str() const;

 private:
  Rational q_ = 0;
  int sqrtpi_ = 0;  // 0 or 1; zero scalars keep power 0
};

/// Dense polynomial in t over the rationals, coefficients in ascending order.
/// The zero polynomial has an empty coefficient vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(Rational c);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;

  RationalPoly derivative() const;
  Rational evaluate(const Rational& t) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);

  /// Multiply by t^k.
  RationalPoly shifted(unsigned k) const;

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace sfheat
