#include "sfheat/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "sfheat/quadrature.hpp"

namespace sfheat {

namespace {

// Sphere and hyperbolic evaluation below this time is ill-conditioned in the
// jet ladder; callers wanting t -> 0 asymptotics use the trace module.
constexpr double kSmallTimeFloor = 1e-4;

void check_time(double t) {
  if (!(t > 0)) throw UsageError("heat kernel: t must be positive");
}

void check_time_floored(double t) {
  check_time(t);
  if (t < kSmallTimeFloor) throw UsageError("heat kernel: t below the 1e-4 evaluation floor");
}

// Number of images K such that the dropped wrapped-Gaussian tail is below tol.
int theta_image_count(double t, const ThetaTruncation& trunc) {
  double denom = -std::expm1(-M_PI * M_PI / t);  // 1 - e^(-pi^2/t)
  double pref = 2.0 / std::sqrt(4.0 * M_PI * t) / denom;
  int K = 1;
  while (true) {
    double d = (2.0 * K - 1.0) * M_PI;
    if (pref * std::exp(-d * d / (4.0 * t)) < trunc.tol) break;
    ++K;
    if (2 * K + 1 > trunc.max_terms)
      throw TruncationError("circle_kernel_jet: image count exceeds max_terms");
  }
  return K;
}

}  // namespace

double euclid_kernel(int n, double t, double r) {
  if (n < 1) throw UsageError("euclid_kernel: dimension must be >= 1");
  if (r < 0) throw UsageError("euclid_kernel: r must be >= 0");
  check_time(t);
  return std::pow(4.0 * M_PI * t, -0.5 * n) * std::exp(-r * r / (4.0 * t));
}

Jet circle_kernel_jet(double t, double r0, int order, const ThetaTruncation& trunc) {
  check_time(t);
  // reduce to [0, pi] by 2pi-periodicity and evenness
  double rr = std::abs(std::remainder(r0, 2.0 * M_PI));
  rr = snap_center(rr);
  int K = theta_image_count(t, trunc);
  Jet sum = Jet::constant(rr, 0.0, order);
  if (rr == 0.0) {
    sum += jet_gaussian(0.0, t, rr, order);
    for (int k = 1; k <= K; ++k) {
      Jet g = jet_gaussian(2.0 * M_PI * k, t, rr, order);
      sum += g;
      sum += g.reflected();  // the -k image, exact mirror
    }
  } else if (rr == M_PI) {
    // images pair as (k, -k-1); the pairing keeps odd coefficients exactly zero
    for (int k = 0; k < K; ++k) {
      Jet g = jet_gaussian(2.0 * M_PI * k, t, rr, order);
      sum += g;
      sum += g.reflected();
    }
  } else {
    for (int k = -K; k <= K; ++k) sum += jet_gaussian(2.0 * M_PI * k, t, rr, order);
  }
  return sum * (1.0 / std::sqrt(4.0 * M_PI * t));
}

double circle_kernel(double t, double r, const ThetaTruncation& trunc) {
  return circle_kernel_jet(t, r, 0, trunc).value();
}

namespace {

Jet odd_ladder_jet(int m, double t, double r0, int order, bool sphere,
                   const ThetaTruncation& trunc) {
  if (m < 1) throw UsageError("odd kernel: m must be >= 1");
  check_time_floored(t);
  double rr = snap_center(r0);
  bool singular = (rr == 0.0 || rr == M_PI);
  int request = (singular ? 2 * m : m) + order + 2;
  Jet f = sphere ? circle_kernel_jet(t, rr, request, trunc)
                 : jet_gaussian(0.0, t, rr, request) * (1.0 / std::sqrt(4.0 * M_PI * t));
  for (int j = 0; j < m; ++j) {
    Jet s = sphere ? jet_sin(f.center(), f.order()) : jet_sinh(f.center(), f.order());
    f = ladder_apply(f, s, true);
  }
  double expo = (sphere ? 1.0 : -1.0) * static_cast<double>(m) * m * t;
  if (expo > 690.0) throw UsageError("odd kernel: exp(m^2 t) out of double range");
  double scale = std::exp(expo) * std::pow(2.0 * M_PI, -m);
  f = f * scale;
  return f.truncated(order);
}

}  // namespace

double sphere_odd_kernel(int m, double t, double r, const ThetaTruncation& trunc) {
  if (r < -1e-14 || r > M_PI + 1e-14) throw UsageError("sphere_odd_kernel: r outside [0, pi]");
  return odd_ladder_jet(m, t, std::clamp(r, 0.0, M_PI), 0, true, trunc).value();
}

Jet sphere_odd_kernel_jet(int m, double t, double r0, int order, const ThetaTruncation& trunc) {
  if (r0 < -1e-14 || r0 > M_PI + 1e-14) throw UsageError("sphere_odd_kernel: r outside [0, pi]");
  return odd_ladder_jet(m, t, std::clamp(r0, 0.0, M_PI), order, true, trunc);
}

double hyperbolic_odd_kernel(int m, double t, double r) {
  if (r < -1e-14) throw UsageError("hyperbolic_odd_kernel: r must be >= 0");
  return odd_ladder_jet(m, t, std::max(r, 0.0), 0, false, {}).value();
}

Jet hyperbolic_odd_kernel_jet(int m, double t, double r0, int order) {
  if (r0 < -1e-14) throw UsageError("hyperbolic_odd_kernel: r must be >= 0");
  return odd_ladder_jet(m, t, std::max(r0, 0.0), order, false, {});
}

double euclid_recurrence_identity(int n, double t, double r) {
  if (!(r > 0)) throw UsageError("euclid_recurrence_identity: r must be positive");
  check_time(t);
  double hn = euclid_kernel(n, t, r);
  // derivative form: H_{n+2} + (1/(2 pi r)) dH_n/dr, with dH_n/dr = -(r/2t) H_n
  double deriv_form = euclid_kernel(n + 2, t, r) - hn / (4.0 * M_PI * t);
  // integral form: H_n - 2 * int_r^inf H_{n+1} rho (rho^2-r^2)^(-1/2) drho,
  // u^2 = rho^2 - r^2
  double umax = std::sqrt(4.0 * t * 45.0) + 1.0;
  double integral = 2.0 * integrate_adaptive(
                              [&](double u) {
                                return euclid_kernel(n + 1, t, std::hypot(r, u));
                              },
                              0.0, umax, 16, 1e-13 * hn);
  double integral_form = hn - integral;
  return std::max(std::abs(deriv_form), std::abs(integral_form)) / hn;
}

// ---------------------------------------------------------------------------

EuclideanHeatKernel::EuclideanHeatKernel(int n) : n_(n) {
  if (n < 1) throw UsageError("EuclideanHeatKernel: dimension must be >= 1");
}

double EuclideanHeatKernel::value(double t, double r) const { return euclid_kernel(n_, t, r); }

Capabilities EuclideanHeatKernel::capabilities() const {
  Capabilities caps;
  caps.radial_jet = true;
  caps.max_jet_order = 40;
  caps.time_derivative = true;
  return caps;
}

Jet EuclideanHeatKernel::radial_jet(double t, double r0, int order) const {
  check_time(t);
  return jet_gaussian(0.0, t, r0, order) * std::pow(4.0 * M_PI * t, -0.5 * n_);
}

double EuclideanHeatKernel::time_derivative(double t, double r) const {
  return value(t, r) * (r * r / (4.0 * t * t) - 0.5 * n_ / t);
}

SphereOddHeatKernel::SphereOddHeatKernel(int m, ThetaTruncation trunc) : m_(m), trunc_(trunc) {
  if (m < 1) throw UsageError("SphereOddHeatKernel: m must be >= 1");
}

double SphereOddHeatKernel::value(double t, double r) const {
  return sphere_odd_kernel(m_, t, r, trunc_);
}

Capabilities SphereOddHeatKernel::capabilities() const {
  Capabilities caps;
  caps.radial_jet = true;
  caps.max_jet_order = 12;
  caps.min_time = kSmallTimeFloor;
  return caps;
}

Jet SphereOddHeatKernel::radial_jet(double t, double r0, int order) const {
  return sphere_odd_kernel_jet(m_, t, r0, order, trunc_);
}

HyperbolicOddHeatKernel::HyperbolicOddHeatKernel(int m) : m_(m) {
  if (m < 1) throw UsageError("HyperbolicOddHeatKernel: m must be >= 1");
}

double HyperbolicOddHeatKernel::value(double t, double r) const {
  return hyperbolic_odd_kernel(m_, t, r);
}

Capabilities HyperbolicOddHeatKernel::capabilities() const {
  Capabilities caps;
  caps.radial_jet = true;
  caps.max_jet_order = 12;
  caps.min_time = kSmallTimeFloor;
  return caps;
}

Jet HyperbolicOddHeatKernel::radial_jet(double t, double r0, int order) const {
  return hyperbolic_odd_kernel_jet(m_, t, r0, order);
}

}  // namespace sfheat
