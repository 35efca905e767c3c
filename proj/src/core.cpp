#include "sfheat/core.hpp"

#include <cmath>
#include <limits>

namespace sfheat {

Jet KernelEvaluator::radial_jet(double, double, int) const {
  throw UsageError("KernelEvaluator: radial_jet not supported by this evaluator");
}

double KernelEvaluator::time_derivative(double, double) const {
  throw UsageError("KernelEvaluator: time_derivative not supported by this evaluator");
}

double sphere_volume(int d) {
  if (d < 0) throw UsageError("sphere_volume: negative dimension");
  // Vol(S^d) = 2 pi^((d+1)/2) / Gamma((d+1)/2), evaluated via the Gamma
  // recursion from the d = 0, 1 base cases to stay exact in the rationals.
  double vol = (d % 2 == 0) ? 2.0 : 2.0 * M_PI;
  for (int k = d % 2; k < d; k += 2) vol *= 2.0 * M_PI / static_cast<double>(k + 1);
  return vol;
}

ExactScalar gamma_half(int j) {
  if (j < 0) throw UsageError("gamma_half: negative argument");
  return ExactScalar(gamma_half_rational(j), 1);
}

Rational gamma_half_rational(int j) {
  if (j < 0) throw UsageError("gamma_half: negative argument");
  // (2j)! / (4^j j!)
  BigInt four_j = 1;
  four_j <<= 2 * j;
  return Rational(factorial(static_cast<unsigned>(2 * j)),
                  four_j * factorial(static_cast<unsigned>(j)));
}

}  // namespace sfheat
