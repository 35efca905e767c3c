#pragma once

#include <cstddef>
#include <vector>

#include "sfheat/errors.hpp"

namespace sfheat {

/// Truncated Taylor expansion of a radial function about a fixed center.
///
/// Coefficients are stored in scaled (Taylor) form: coeff(k) = f^(k)(c)/k!,
/// so order-40 jets stay within double range. Arithmetic requires matching
/// centers. Division tolerates a numerator that vanishes to at least the
/// order of the denominator; vanishing is detected through exact floating
/// zeros, which the elementary-jet constructors guarantee at snapped centers.
class Jet {
 public:
  Jet(double center, std::vector<double> coeffs);

  static Jet constant(double center, double value, int order);

  double center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Value at the center (the order-0 coefficient).
  double value() const { return coeffs_[0]; }

  /// Index of the first exactly nonzero coefficient (order+1 for the zero jet).
  int vanishing_order() const noexcept;

  Jet truncated(int order) const;
  Jet derivative() const;  // order drops by one

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(double c);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(const Jet& a, const Jet& b);  // truncated Cauchy product
  friend Jet operator/(const Jet& a, const Jet& b);  // series division, order drops by v_b

  /// Flip the sign of every odd coefficient: the jet of r -> f(2c - r).
  Jet reflected() const;

 private:
  void check_center(const Jet& other) const;

  double center_;
  std::vector<double> coeffs_;
};

/// Snap centers within 1e-14 of 0 or +-pi to the exact symmetric point.
/// Elementary jets built at snapped centers carry exact zero coefficients
/// in the parity positions that symmetry forces.
double snap_center(double r0);

Jet jet_sin(double center, int order);
Jet jet_cos(double center, int order);
Jet jet_sinh(double center, int order);
Jet jet_cosh(double center, int order);

/// Jet of exp(-(r + shift)^2 / (4t)) about `center`, for t > 0.
Jet jet_gaussian(double shift, double t, double center, int order);

/// One rung of the dimension ladder: -+ (1/s) d/dr applied to f.
///
/// `s` is the sine-like factor (sin or sinh jet at the same center). At a
/// center where s vanishes, f' must vanish at least to the same order; the
/// quotient is then the removable-singularity value. Output order is
/// f.order()-1 at regular centers and f.order()-1-v_s at singular ones.
Jet ladder_apply(const Jet& f, const Jet& s, bool negate);

}  // namespace sfheat
