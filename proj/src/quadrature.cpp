#include "sfheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace sfheat {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Newton iteration on P_n from the Chebyshev-like initial guess; the
  // recurrence also yields P_n' for the weight formula.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one clean-up iteration for the weight
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw UsageError("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int nodes) {
  const GaussRule& rule = gauss_legendre(nodes);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

double integrate_panels(const std::function<double(double)>& f, std::span<const double> breaks,
                        int nodes) {
  if (breaks.size() < 2) throw UsageError("integrate_panels: need at least two breakpoints");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) sum += integrate_gl(f, breaks[i], breaks[i + 1], nodes);
  return sum;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           int nodes) {
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    double pa = a + (b - a) * i / panels;
    double pb = a + (b - a) * (i + 1) / panels;
    sum += integrate_gl(f, pa, pb, nodes);
  }
  return sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, int nodes,
                          double tol, int max_doublings, double* err_est) {
  int panels = 1;
  double prev = integrate_composite(f, a, b, panels, nodes);
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    double cur = integrate_composite(f, a, b, panels, nodes);
    double diff = std::abs(cur - prev);
    if (diff < tol / 4.0) {
      if (err_est) *err_est = diff;
      return cur;
    }
    prev = cur;
  }
  throw AccuracyError("integrate_adaptive: tolerance not reached", std::abs(prev));
}

std::vector<double> graded_breakpoints(double a, double b, double peak, double width,
                                       double growth) {
  if (!(width > 0) || !(growth > 1)) throw UsageError("graded_breakpoints: bad parameters");
  std::vector<double> breaks;
  breaks.push_back(peak);
  // walk outward from the peak in geometrically growing steps, both sides
  for (int sign : {-1, +1}) {
    double limit = (sign < 0) ? a : b;
    double pos = peak;
    double step = width;
    while (sign * (limit - pos) > 0) {
      pos += sign * step;
      if (sign * (limit - pos) <= step * 0.25) pos = limit;
      breaks.push_back(pos);
      step *= growth;
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  // clamp to [a, b] in case the peak sits outside
  while (breaks.size() > 1 && breaks.front() < a) breaks.erase(breaks.begin());
  while (breaks.size() > 1 && breaks.back() > b) breaks.pop_back();
  if (breaks.front() > a) breaks.insert(breaks.begin(), a);
  if (breaks.back() < b) breaks.push_back(b);
  return breaks;
}

double integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_level) {
  // x = mid + half*tanh((pi/2) sinh u), truncated where the weight underflows
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  auto eval = [&](double u) {
    double s = std::sinh(u);
    double c = std::cosh(u);
    double th = std::tanh(0.5 * M_PI * s);
    double sech = 1.0 / std::cosh(0.5 * M_PI * s);
    double w = 0.5 * M_PI * c * sech * sech;
    if (w < 1e-300) return 0.0;
    double x = mid + half * th;
    if (x <= a || x >= b) return 0.0;  // guard against rounding onto the endpoints
    return w * f(x);
  };
  const double umax = 4.0;
  double h = 1.0;
  double sum = eval(0.0);
  for (double u = h; u <= umax; u += h) sum += eval(u) + eval(-u);
  double prev = sum * h * half;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double extra = 0.0;
    for (double u = h; u <= umax; u += 2.0 * h) extra += eval(u) + eval(-u);
    double cur = 0.5 * prev + extra * h * half;
    if (level >= 3 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw AccuracyError("integrate_tanh_sinh: tolerance not reached", std::abs(prev));
}

}  // namespace sfheat
