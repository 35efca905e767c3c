#include "sfheat/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sfheat/exact.hpp"

namespace sfheat {

namespace {

void check_sphere_args(int n, int k) {
  if (n < 2) throw UsageError("spectral: sphere dimension must be >= 2");
  if (k < 0) throw UsageError("spectral: degree must be >= 0");
}

// mult(n, k) / mult(n, k-1), exact in doubles for moderate k
double multiplicity_ratio(int n, int k) {
  return (2.0 * k + n - 1.0) / (2.0 * k + n - 3.0) * (k + n - 2.0) / k;
}

}  // namespace

std::int64_t multiplicity(int n, int k) {
  check_sphere_args(n, k);
  if (k == 0) return 1;
  BigInt m = BigInt(2 * k + n - 1) * binomial(static_cast<unsigned>(k + n - 2),
                                              static_cast<unsigned>(n - 2));
  BigInt q = m / (n - 1);
  if (q * (n - 1) != m) throw std::logic_error("multiplicity: non-integer result");
  if (q > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("multiplicity: result exceeds int64 range");
  return static_cast<std::int64_t>(q);
}

double zonal_ratio(int n, int k, double x) {
  check_sphere_args(n, k);
  if (x < -1.0 || x > 1.0) throw UsageError("zonal_ratio: x outside [-1, 1]");
  if (k == 0) return 1.0;
  double rm2 = 1.0;  // R_0
  double rm1 = x;    // R_1 = x for every n
  for (int j = 2; j <= k; ++j) {
    double r = ((2.0 * j + n - 3.0) * x * rm1 - (j - 1.0) * rm2) / (j + n - 2.0);
    rm2 = rm1;
    rm1 = r;
  }
  return rm1;
}

std::vector<double> spectral_mode_factors(int n, double t, const SpectralTruncation& trunc) {
  check_sphere_args(n, 0);
  if (!(t > 0)) throw UsageError("spectral: t must be positive");
  std::vector<double> factors;
  double mult = 1.0;
  double prev_bound = std::numeric_limits<double>::infinity();
  for (int k = 0;; ++k) {
    if (k > trunc.k_max)
      throw TruncationError("spectral series: k_max exceeded before reaching tolerance");
    if (k > 0) mult *= multiplicity_ratio(n, k);
    double bound = mult * std::exp(-static_cast<double>(k) * (k + n - 1.0) * t);
    factors.push_back(bound);
    if (k >= 1 && bound < trunc.tol && bound <= prev_bound) break;
    prev_bound = bound;
  }
  return factors;
}

double spectral_sum_with_factors(int n, std::span<const double> factors, double x) {
  double sum = 0.0;
  double rm2 = 0.0, rm1 = 0.0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    double r;
    if (k == 0) r = 1.0;
    else if (k == 1) r = x;
    else {
      double j = static_cast<double>(k);
      r = ((2.0 * j + n - 3.0) * x * rm1 - (j - 1.0) * rm2) / (j + n - 2.0);
    }
    sum += factors[k] * r;
    rm2 = rm1;
    rm1 = r;
  }
  return sum / sphere_volume(n);
}

double sphere_kernel_spectral(int n, double t, double r, const SpectralTruncation& trunc) {
  if (r < -1e-14 || r > M_PI + 1e-14)
    throw UsageError("sphere_kernel_spectral: r outside [0, pi]");
  std::vector<double> factors = spectral_mode_factors(n, t, trunc);
  return spectral_sum_with_factors(n, factors, std::cos(std::clamp(r, 0.0, M_PI)));
}

double sphere_trace(int n, double t, const SpectralTruncation& trunc) {
  std::vector<double> factors = spectral_mode_factors(n, t, trunc);
  double sum = 0.0;
  for (double f : factors) sum += f;
  return sum;
}

double sphere_diagonal_spectral(int n, double t, const SpectralTruncation& trunc) {
  return sphere_trace(n, t, trunc) / sphere_volume(n);
}

// ---------------------------------------------------------------------------

SphereSpectralKernel::SphereSpectralKernel(int n, SpectralTruncation trunc)
    : n_(n), trunc_(trunc) {
  check_sphere_args(n, 0);
}

double SphereSpectralKernel::value(double t, double r) const {
  return sphere_kernel_spectral(n_, t, r, trunc_);
}

Capabilities SphereSpectralKernel::capabilities() const {
  Capabilities caps;
  caps.radial_jet = true;
  caps.max_jet_order = 6;
  caps.time_derivative = true;
  caps.spectral_sphere = true;
  return caps;
}

Jet SphereSpectralKernel::radial_jet(double t, double r0, int order) const {
  double rr = snap_center(r0);
  if (rr == 0.0 || rr == M_PI)
    throw UsageError("SphereSpectralKernel: jets not supported at the poles");
  if (rr < 0.0 || rr > M_PI) throw UsageError("SphereSpectralKernel: r outside [0, pi]");
  // Jet coefficients of mode k grow like lambda_k^(order/2); tighten the
  // value-based truncation so the extra growth stays below tolerance.
  SpectralTruncation tight = trunc_;
  tight.tol = std::max(trunc_.tol * 1e-8, 1e-280);
  std::vector<double> factors = spectral_mode_factors(n_, t, tight);
  // Each mode u_k(r) = R_k(cos r) satisfies u'' = -lambda_k u - (n-1) cot(r) u'.
  // The Taylor coefficients past order 1 follow from that ODE:
  //   (j+1)(j+2) U_{j+2} = -lambda U_j - (n-1) * [cot * u']_j.
  Jet cot = jet_cos(rr, order) / jet_sin(rr, order);
  double x = std::cos(rr);
  double dx = -std::sin(rr);
  std::vector<double> total(static_cast<std::size_t>(order) + 1, 0.0);
  double rm2 = 0.0, rm1 = 0.0, dm2 = 0.0, dm1 = 0.0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    double r, dr;
    if (k == 0) { r = 1.0; dr = 0.0; }
    else if (k == 1) { r = x; dr = 1.0; }
    else {
      double j = static_cast<double>(k);
      r = ((2.0 * j + n_ - 3.0) * x * rm1 - (j - 1.0) * rm2) / (j + n_ - 2.0);
      dr = ((2.0 * j + n_ - 3.0) * (x * dm1 + rm1) - (j - 1.0) * dm2) / (j + n_ - 2.0);
    }
    double lambda = static_cast<double>(k) * (k + n_ - 1.0);
    std::vector<double> u(static_cast<std::size_t>(order) + 1, 0.0);
    u[0] = r;
    if (order >= 1) u[1] = dr * dx;
    for (int j = 0; j + 2 <= order; ++j) {
      double conv = 0.0;  // [cot * u']_j
      for (int i = 0; i <= j; ++i)
        conv += cot.coeff(i) * (j - i + 1.0) * u[static_cast<std::size_t>(j - i + 1)];
      u[static_cast<std::size_t>(j + 2)] =
          (-lambda * u[static_cast<std::size_t>(j)] - (n_ - 1.0) * conv) /
          ((j + 1.0) * (j + 2.0));
    }
    for (int j = 0; j <= order; ++j) total[static_cast<std::size_t>(j)] += factors[k] * u[static_cast<std::size_t>(j)];
    rm2 = rm1; rm1 = r;
    dm2 = dm1; dm1 = dr;
  }
  double inv_vol = 1.0 / sphere_volume(n_);
  for (double& c : total) c *= inv_vol;
  return Jet(rr, std::move(total));
}

double SphereSpectralKernel::time_derivative(double t, double r) const {
  SpectralTruncation tight = trunc_;
  tight.tol = std::max(trunc_.tol * 1e-8, 1e-280);
  std::vector<double> factors = spectral_mode_factors(n_, t, tight);
  for (std::size_t k = 0; k < factors.size(); ++k)
    factors[k] *= -(static_cast<double>(k) * (k + n_ - 1.0));
  return spectral_sum_with_factors(n_, factors, std::cos(std::clamp(r, 0.0, M_PI)));
}

}  // namespace sfheat
