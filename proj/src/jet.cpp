#include "sfheat/jet.hpp"

#include <algorithm>
#include <cmath>

namespace sfheat {

namespace {

constexpr double kCenterSnapTol = 1e-14;

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

Jet::Jet(double center, std::vector<double> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("Jet: needs at least the order-0 coefficient");
  if (!all_finite(coeffs_)) throw UsageError("Jet: non-finite coefficient");
}

Jet Jet::constant(double center, double value, int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = value;
  return Jet(center, std::move(c));
}

int Jet::vanishing_order() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  return static_cast<int>(coeffs_.size());
}

Jet Jet::truncated(int order) const {
  if (order < 0 || order > this->order()) throw UsageError("Jet::truncated: bad order");
  return Jet(center_, std::vector<double>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet Jet::derivative() const {
  if (order() < 1) throw UsageError("Jet::derivative: order-0 jet");
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Jet(center_, std::move(d));
}

void Jet::check_center(const Jet& other) const {
  if (center_ != other.center_) throw UsageError("Jet: mismatched centers");
}

Jet& Jet::operator+=(const Jet& rhs) {
  check_center(rhs);
  std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_center(rhs);
  std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator*=(double c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_center(b);
  std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<double> prod(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Jet(a.center_, std::move(prod));
}

Jet operator/(const Jet& a, const Jet& b) {
  a.check_center(b);
  int vb = b.vanishing_order();
  if (vb > b.order()) throw SingularityError("Jet division: zero denominator jet");
  if (vb > 0) {
    int va = a.vanishing_order();
    if (va < vb)
      throw SingularityError("Jet division: pole detected (numerator vanishes to lower order)");
  }
  // shift out the common vanishing order, then run plain series division
  int d = std::min(a.order(), b.order());
  int out_order = d - vb;
  std::vector<double> num(a.coeffs_.begin() + vb, a.coeffs_.begin() + d + 1);
  std::vector<double> den(b.coeffs_.begin() + vb, b.coeffs_.begin() + d + 1);
  std::vector<double> q(static_cast<std::size_t>(out_order) + 1, 0.0);
  for (int k = 0; k <= out_order; ++k) {
    double s = num[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) s -= q[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(k - i)];
    q[static_cast<std::size_t>(k)] = s / den[0];
  }
  return Jet(a.center_, std::move(q));
}

Jet Jet::reflected() const {
  std::vector<double> c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Jet(center_, std::move(c));
}

double snap_center(double r0) {
  if (std::abs(r0) <= kCenterSnapTol) return 0.0;
  if (std::abs(r0 - M_PI) <= kCenterSnapTol) return M_PI;
  if (std::abs(r0 + M_PI) <= kCenterSnapTol) return -M_PI;
  return r0;
}

namespace {

// sin/cos jets share the four-phase derivative cycle. At snapped centers the
// alternating coefficients are written as exact zeros so that removable
// divisions downstream see true vanishing orders.
Jet trig_jet(double center, int order, bool want_sin) {
  double c0 = snap_center(center);
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 0.0);
  double s, c;
  bool exact = (c0 == 0.0 || c0 == M_PI || c0 == -M_PI);
  if (exact) {
    s = 0.0;
    c = (c0 == 0.0) ? 1.0 : -1.0;
  } else {
    s = std::sin(c0);
    c = std::cos(c0);
  }
  // cycle of derivatives of sin: sin, cos, -sin, -cos
  const double cyc_sin[4] = {s, c, -s, -c};
  const double cyc_cos[4] = {c, -s, -c, s};
  double inv_fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) inv_fact /= static_cast<double>(k);
    double v = (want_sin ? cyc_sin[k % 4] : cyc_cos[k % 4]) * inv_fact;
    coeffs[static_cast<std::size_t>(k)] = v;
  }
  return Jet(c0, std::move(coeffs));
}

Jet hyp_jet(double center, int order, bool want_sinh) {
  double c0 = snap_center(center);
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 0.0);
  double s = (c0 == 0.0) ? 0.0 : std::sinh(c0);
  double c = (c0 == 0.0) ? 1.0 : std::cosh(c0);
  double inv_fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) inv_fact /= static_cast<double>(k);
    double base = (k % 2 == 0) == want_sinh ? s : c;
    coeffs[static_cast<std::size_t>(k)] = base * inv_fact;
  }
  return Jet(c0, std::move(coeffs));
}

}  // namespace

Jet jet_sin(double center, int order) { return trig_jet(center, order, true); }
Jet jet_cos(double center, int order) { return trig_jet(center, order, false); }
Jet jet_sinh(double center, int order) { return hyp_jet(center, order, true); }
Jet jet_cosh(double center, int order) { return hyp_jet(center, order, false); }

Jet jet_gaussian(double shift, double t, double center, int order) {
  if (!(t > 0)) throw UsageError("jet_gaussian: t must be positive");
  double c0 = snap_center(center);
  double a = c0 + shift;
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 0.0);
  // f' = -((a + x)/(2t)) f  =>  (k+1) c_{k+1} = -(a c_k + c_{k-1}) / (2t)
  coeffs[0] = std::exp(-a * a / (4.0 * t));
  for (int k = 0; k < order; ++k) {
    double prev = (k >= 1) ? coeffs[static_cast<std::size_t>(k - 1)] : 0.0;
    coeffs[static_cast<std::size_t>(k + 1)] =
        -(a * coeffs[static_cast<std::size_t>(k)] + prev) / (2.0 * t * (k + 1));
  }
  return Jet(c0, std::move(coeffs));
}

Jet ladder_apply(const Jet& f, const Jet& s, bool negate) {
  if (f.order() < 1) throw UsageError("ladder_apply: f needs order >= 1");
  Jet df = f.derivative();
  if (s.vanishing_order() > 0 && df.coeff(0) != 0.0)
    throw SingularityError("ladder_apply: pole (f' does not vanish where s does)");
  Jet out = df / s;
  return negate ? -out : out;
}

}  // namespace sfheat
