#pragma once

#include <cmath>

#include "sfheat/errors.hpp"
#include "sfheat/exact.hpp"
#include "sfheat/jet.hpp"

namespace sfheat {

enum class Curvature { Euclidean, Sphere, Hyperbolic };

/// Simply connected space form of unit curvature radius: S^n, R^n or H^n.
struct SpaceForm {
  Curvature kind;
  int dim;

  SpaceForm(Curvature k, int n) : kind(k), dim(n) {
    if (n < 1) throw UsageError("SpaceForm: dimension must be >= 1");
  }

  static SpaceForm euclidean(int n) { return {Curvature::Euclidean, n}; }
  static SpaceForm sphere(int n) { return {Curvature::Sphere, n}; }
  static SpaceForm hyperbolic(int n) { return {Curvature::Hyperbolic, n}; }

  bool bounded() const noexcept { return kind == Curvature::Sphere; }
  double r_max() const noexcept {
    return bounded() ? M_PI : std::numeric_limits<double>::infinity();
  }
  bool contains_r(double r) const noexcept { return r >= 0.0 && r <= r_max(); }

  /// The first-order coefficient of the radial Laplacian: cot, coth or 1/r.
  double radial_drift(double r) const {
    switch (kind) {
      case Curvature::Sphere: return 1.0 / std::tan(r);
      case Curvature::Hyperbolic: return 1.0 / std::tanh(r);
      case Curvature::Euclidean: return 1.0 / r;
    }
    return 0.0;
  }
};

struct EvalPoint {
  double t;
  double r;
};

/// What a kernel evaluator can do beyond plain point evaluation. The verify
/// and Abel modules pick their numerical strategy from these flags instead of
/// probing by trial call.
struct Capabilities {
  bool radial_jet = false;
  int max_jet_order = 0;
  bool time_derivative = false;
  /// True when the evaluator is the zonal eigenfunction series of a sphere
  /// kernel; enables eigenbasis shortcuts where mathematically equivalent.
  bool spectral_sphere = false;
  /// Smallest time the evaluator supports (0 = unrestricted).
  double min_time = 0.0;
};

/// Uniform interface to a radial heat kernel h(t, r).
class KernelEvaluator {
 public:
  virtual ~KernelEvaluator() = default;

  virtual double value(double t, double r) const = 0;
  virtual Capabilities capabilities() const { return {}; }

  /// Taylor jet of r -> h(t, r) about r0. Only valid when
  /// capabilities().radial_jet holds and order <= max_jet_order.
  virtual Jet radial_jet(double t, double r0, int order) const;

  /// dh/dt at (t, r); only when capabilities().time_derivative holds.
  virtual double time_derivative(double t, double r) const;

  /// Dimension of the underlying space (0 when not applicable).
  virtual int dim() const { return 0; }
};

/// Volume of the unit d-sphere S^d: 2 pi^((d+1)/2) / Gamma((d+1)/2).
double sphere_volume(int d);

/// Gamma(j + 1/2) = ((2j)! / (4^j j!)) sqrt(pi), exactly.
ExactScalar gamma_half(int j);

/// Rational part of Gamma(j + 1/2), i.e. gamma_half(j) with sqrt(pi) removed.
Rational gamma_half_rational(int j);

}  // namespace sfheat
