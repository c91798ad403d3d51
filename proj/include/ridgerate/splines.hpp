#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ridgerate/common.hpp"

namespace ridgerate {

// sigma_k(x) = max(0,x)^k with 0^0 = 0, so sigma_0 is the Heaviside step
// vanishing at the origin.
double relu_power(int k, double x);

// r-th derivative of sigma_k, one-sided from the right at the kink.
double relu_power_deriv(int k, int r, double x);

// Cardinal B-spline of degree k on integer knots: the alternating sum of
// k+2 shifted sigma_k terms, supported on [0, k+1].
class BSpline {
 public:
  explicit BSpline(int k);
  int degree() const { return k_; }
  double operator()(double x) const;
  double deriv(int r, double x) const;  // right-sided at knots
 private:
  int k_;
  std::vector<double> coeff_;  // (-1)^i C(k+1, i) / k!
};

BSpline bspline(int k);

// Scalar function carrying analytic derivatives; every input we
// quasi-interpolate (exponentials, spline residuals, polynomials) has them.
struct SmoothFn {
  std::function<Cplx(double)> value;
  std::function<Cplx(int, double)> deriv;  // deriv(r, x)
};

SmoothFn exponential_fn(double freq);                  // e^{2 pi i freq x}
SmoothFn polynomial_fn(std::vector<double> coeffs);    // sum_i c_i x^i

struct Interval {
  double lo = 0.0, hi = 1.0;
};

// Coefficients gamma_j of Q_lambda f = sum_j gamma_j N_k(x/lambda - j),
// produced for every knot j whose B-spline support meets `window`. The
// functionals are the classical derivative-based duals on uniform knots;
// they reproduce every spline in S^k_lambda.
std::map<long, Cplx> quasi_interpolate(const SmoothFn& f, double lambda, int k, Interval window);

// Telescoped expansion of e^{2 pi i x} over dyadic knot ladders:
// level 1 holds the coefficients of Q_{1/2}, level l > 1 those of
// Q_{2^-l} applied to the previous residual.
struct MultiscaleExpansion {
  int k = 0;
  Interval window;
  std::vector<std::map<long, Cplx>> levels;  // levels[l-1]: j -> alpha_{j,l}
  int max_level() const { return static_cast<int>(levels.size()); }
  double level_max_abs(int l) const;  // max_j |alpha_{j,l}|
};

MultiscaleExpansion multiscale_expand(int k, int l_max, Interval window);

// Partial sum through `levels` at x; levels = 0 is the empty sum.
Cplx level_sum_eval(const MultiscaleExpansion& exp, int levels, double x);
Cplx level_sum_deriv(const MultiscaleExpansion& exp, int levels, int r, double x);

// e^{2 pi i x} minus the partial sum, with analytic derivatives.
SmoothFn residual_fn(const MultiscaleExpansion& exp, int levels);

}  // namespace ridgerate
