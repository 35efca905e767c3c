#include "sfheat/exact.hpp"

#include <cmath>

namespace sfheat {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;  // exact at every step: b is C(n, i+1) times a partial product
  }
  return b;
}

ExactScalar::ExactScalar(Rational q, int sqrtpi_power) : q_(std::move(q)), sqrtpi_(sqrtpi_power) {
  if (sqrtpi_ != 0 && sqrtpi_ != 1) throw UsageError("ExactScalar: sqrtpi power must be 0 or 1");
  if (q_ == 0) sqrtpi_ = 0;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  if (rhs.q_ == 0) return *this;
  if (q_ == 0) { *this = rhs; return *this; }
  if (sqrtpi_ != rhs.sqrtpi_)
    throw UsageError("ExactScalar: cannot add scalars with different sqrt(pi) powers");
  q_ += rhs.q_;
  if (q_ == 0) sqrtpi_ = 0;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  ExactScalar neg(-rhs.q_, rhs.sqrtpi_);
  return *this += neg;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  if (sqrtpi_ + rhs.sqrtpi_ > 1)
    throw UsageError("ExactScalar: product of two sqrt(pi)-carrying scalars");
  q_ *= rhs.q_;
  sqrtpi_ = (q_ == 0) ? 0 : sqrtpi_ + rhs.sqrtpi_;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.q_ == 0) throw UsageError("ExactScalar: division by zero");
  if (sqrtpi_ - rhs.sqrtpi_ < 0)
    throw UsageError("ExactScalar: division would leave a negative sqrt(pi) power");
  q_ /= rhs.q_;
  sqrtpi_ = (q_ == 0) ? 0 : sqrtpi_ - rhs.sqrtpi_;
  return *this;
}

double ExactScalar::to_double() const {
  double v = static_cast<double>(q_);
  if (sqrtpi_ == 1) v *= std::sqrt(M_PI);
  return v;
}

std::string ExactScalar::str() const {
  std::string s = q_.str();
  if (sqrtpi_ == 1) s += "*sqrt(pi)";
  return s;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

RationalPoly RationalPoly::constant(Rational c) {
  if (c == 0) return RationalPoly{};
  return RationalPoly{{std::move(c)}};
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(k);
  return RationalPoly(std::move(d));
}

Rational RationalPoly::evaluate(const Rational& t) const {
  Rational v = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * t + coeffs_[k];
  return v;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RationalPoly RationalPoly::shifted(unsigned k) const {
  if (coeffs_.empty() || k == 0) return k == 0 ? *this : RationalPoly{};
  std::vector<Rational> s(coeffs_.size() + k, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i + k] = coeffs_[i];
  return RationalPoly(std::move(s));
}

}  // namespace sfheat
