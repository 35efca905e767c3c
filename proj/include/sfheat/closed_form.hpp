#pragma once

#include "sfheat/core.hpp"
#include "sfheat/jet.hpp"

namespace sfheat {

/// Truncation policy for the wrapped-Gaussian (theta) image sums.
struct ThetaTruncation {
  double tol = 1e-14;
  int max_terms = 401;
};

/// Euclidean heat kernel H_n(t, r) = (4 pi t)^(-n/2) exp(-r^2/(4t)).
double euclid_kernel(int n, double t, double r);

/// Circle heat kernel kappa_1(t, r): wrapped Gaussian on a circle of length
/// 2 pi. Returns the Taylor jet about r0 (reduced to [0, pi] by periodicity
/// and evenness). At centers snapped to 0 or pi the image sum is paired so
/// that symmetry-forced coefficients are exact zeros.
Jet circle_kernel_jet(double t, double r0, int order, const ThetaTruncation& trunc = {});

double circle_kernel(double t, double r, const ThetaTruncation& trunc = {});

/// Heat kernel of S^(2m+1) by m rungs of the sine ladder applied to kappa_1.
double sphere_odd_kernel(int m, double t, double r, const ThetaTruncation& trunc = {});
Jet sphere_odd_kernel_jet(int m, double t, double r0, int order, const ThetaTruncation& trunc = {});

/// Heat kernel of H^(2m+1) by m rungs of the sinh ladder applied to the
/// line kernel K_1 = H_1.
double hyperbolic_odd_kernel(int m, double t, double r);
Jet hyperbolic_odd_kernel_jet(int m, double t, double r0, int order);

/// Max of the derivative-form and integral-form Euclidean recurrence
/// residuals at (t, r), relative to H_n(t, r).
double euclid_recurrence_identity(int n, double t, double r);

// ---------------------------------------------------------------------------
// KernelEvaluator adapters
// ---------------------------------------------------------------------------

class EuclideanHeatKernel final : public KernelEvaluator {
 public:
  explicit EuclideanHeatKernel(int n);

  double value(double t, double r) const override;
  Capabilities capabilities() const override;
  Jet radial_jet(double t, double r0, int order) const override;
  double time_derivative(double t, double r) const override;
  int dim() const override { return n_; }

 private:
  int n_;
};

/// S^(2m+1) kernel through the ladder; dimension n = 2m+1.
class SphereOddHeatKernel final : public KernelEvaluator {
 public:
  explicit SphereOddHeatKernel(int m, ThetaTruncation trunc = {});

  double value(double t, double r) const override;
  Capabilities capabilities() const override;
  Jet radial_jet(double t, double r0, int order) const override;
  int dim() const override { return 2 * m_ + 1; }

 private:
  int m_;
  ThetaTruncation trunc_;
};

/// H^(2m+1) kernel through the ladder; dimension n = 2m+1.
class HyperbolicOddHeatKernel final : public KernelEvaluator {
 public:
  explicit HyperbolicOddHeatKernel(int m);

  double value(double t, double r) const override;
  Capabilities capabilities() const override;
  Jet radial_jet(double t, double r0, int order) const override;
  int dim() const override { return 2 * m_ + 1; }

 private:
  int m_;
};

}  // namespace sfheat
