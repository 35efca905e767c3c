#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sfheat/errors.hpp"

namespace sfheat {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule with n points (n >= 1). Thread-safe.
const GaussRule& gauss_legendre(int n);

/// Single Gauss-Legendre panel on [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int nodes);

/// Composite rule over the sorted breakpoints.
double integrate_panels(const std::function<double(double)>& f, std::span<const double> breaks,
                        int nodes);

/// Uniform composite rule with `panels` panels.
double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           int nodes);

/// Panel-doubling until two successive composite answers differ by < tol/4.
/// Throws AccuracyError (carrying the last difference) when max_doublings is
/// exhausted. err_est, when given, receives the final difference.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, int nodes,
                          double tol, int max_doublings = 12, double* err_est = nullptr);

/// Breakpoints on [a, b] geometrically refined toward `peak` down to panels of
/// width `width`. Used to resolve sharp kernel peaks inside larger domains.
std::vector<double> graded_breakpoints(double a, double b, double peak, double width,
                                       double growth = 2.0);

/// tanh-sinh (double exponential) rule on [a, b]; absorbs integrable endpoint
/// singularities. Level-doubling stops when the increment is below tol.
double integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_level = 12);

}  // namespace sfheat
