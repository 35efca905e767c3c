#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfheat/core.hpp"

namespace sfheat {

struct SpectralTruncation {
  double tol = 1e-14;
  int k_max = 1000000;
};

/// Dimension of the space of degree-k spherical harmonics on S^n, n >= 2.
/// Computed in exact big integers; throws std::overflow_error when the
/// result does not fit an int64.
std::int64_t multiplicity(int n, int k);

/// Normalized zonal polynomial G_k(x)/G_k(1) for S^n (Gegenbauer with
/// parameter (n-1)/2), by the ratio-normalized three-term recurrence.
/// zonal_ratio(n, k, 1) == 1 exactly.
double zonal_ratio(int n, int k, double x);

/// mult(n,k) * exp(-k(k+n-1)t) for k = 0..K, truncated when the term bound
/// drops below trunc.tol past the peak. Shared by all spectral sums.
std::vector<double> spectral_mode_factors(int n, double t, const SpectralTruncation& trunc = {});

/// sum_k factors[k] * zonal_ratio(n, k, x) / Vol(S^n), ascending k.
double spectral_sum_with_factors(int n, std::span<const double> factors, double x);

/// Zonal eigenfunction series for the S^n heat kernel at geodesic distance r.
double sphere_kernel_spectral(int n, double t, double r, const SpectralTruncation& trunc = {});

/// Heat trace sum_k mult(n,k) exp(-k(k+n-1)t) on S^n.
double sphere_trace(int n, double t, const SpectralTruncation& trunc = {});

/// Diagonal value kappa_n(t, 0) = sphere_trace / Vol(S^n).
double sphere_diagonal_spectral(int n, double t, const SpectralTruncation& trunc = {});

/// Spectral-series evaluator; the reference oracle for sphere kernels.
/// Radial jets come from the per-mode eigenfunction ODE and are supported at
/// interior centers (not at 0 or pi).
class SphereSpectralKernel final : public KernelEvaluator {
 public:
  explicit SphereSpectralKernel(int n, SpectralTruncation trunc = {});

  double value(double t, double r) const override;
  Capabilities capabilities() const override;
  Jet radial_jet(double t, double r0, int order) const override;
  double time_derivative(double t, double r) const override;
  int dim() const override { return n_; }

 private:
  int n_;
  SpectralTruncation trunc_;
};

}  // namespace sfheat
