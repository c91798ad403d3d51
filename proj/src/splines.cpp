#include "ridgerate/splines.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgerate {

namespace {

double binomial(int n, int i) {
  double b = 1.0;
  for (int j = 0; j < i; ++j) b = b * (n - j) / (j + 1);
  return b;
}

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

// psi_0(u) = prod_{i=1}^{k} (u - i) as monomial coefficients.
std::vector<double> dual_poly(int k) {
  std::vector<double> p{1.0};
  for (int i = 1; i <= k; ++i) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= p[j] * i;
    }
    p = std::move(q);
  }
  return p;
}

double poly_deriv_at(const std::vector<double>& p, int r, double u) {
  double v = 0.0;
  for (std::size_t j = r; j < p.size(); ++j) {
    double c = p[j];
    for (int q = 0; q < r; ++q) c *= static_cast<double>(j) - q;
    v += c * std::pow(u, static_cast<double>(j - r));
  }
  return v;
}

}  // namespace

double relu_power(int k, double x) {
  if (k == 0) return x > 0.0 ? 1.0 : 0.0;
  if (x <= 0.0) return 0.0;
  double v = x;
  for (int i = 1; i < k; ++i) v *= x;
  return v;
}

double relu_power_deriv(int k, int r, double x) {
  if (r == 0) return relu_power(k, x);
  if (r > k) return 0.0;
  // d^r sigma_k = k!/(k-r)! sigma_{k-r}, right-continuous at the kink
  double c = factorial(k) / factorial(k - r);
  if (k == r) return x >= 0.0 ? c : 0.0;
  return c * relu_power(k - r, x);
}

BSpline::BSpline(int k) : k_(k) {
  if (k < 0 || k > 3) throw std::invalid_argument("bspline: degree k must be in {0,1,2,3}");
  coeff_.resize(k + 2);
  const double kfact = factorial(k);
  for (int i = 0; i <= k + 1; ++i)
    coeff_[i] = ((i % 2 == 0) ? 1.0 : -1.0) * binomial(k + 1, i) / kfact;
}

double BSpline::operator()(double x) const {
  if (k_ == 0) return (x > 0.0 && x <= 1.0) ? 1.0 : 0.0;
  // clamping avoids cancellation junk far outside the support
  if (x <= 0.0 || x >= k_ + 1.0) return 0.0;
  double v = 0.0;
  for (int i = 0; i <= k_ + 1; ++i) v += coeff_[i] * relu_power(k_, x - i);
  return v;
}

double BSpline::deriv(int r, double x) const {
  if (r == 0) return (*this)(x);
  if (x < 0.0 || x >= k_ + 1.0) return 0.0;  // right-sided: x = 0 stays in
  double v = 0.0;
  for (int i = 0; i <= k_ + 1; ++i) v += coeff_[i] * relu_power_deriv(k_, r, x - i);
  return v;
}

BSpline bspline(int k) { return BSpline(k); }

SmoothFn exponential_fn(double freq) {
  SmoothFn f;
  const double w = 2.0 * kPi * freq;
  f.value = [freq](double x) { return unit_phase(freq * x); };
  f.deriv = [freq, w](int r, double x) {
    return std::pow(Cplx(0.0, w), r) * unit_phase(freq * x);
  };
  return f;
}

SmoothFn polynomial_fn(std::vector<double> coeffs) {
  SmoothFn f;
  auto eval = [coeffs](int r, double x) -> Cplx {
    double v = 0.0;
    for (std::size_t j = r; j < coeffs.size(); ++j) {
      double c = coeffs[j];
      for (int q = 0; q < r; ++q) c *= static_cast<double>(j) - q;
      v += c * std::pow(x, static_cast<double>(j - r));
    }
    return Cplx(v, 0.0);
  };
  f.value = [eval](double x) { return eval(0, x); };
  f.deriv = eval;
  return f;
}

std::map<long, Cplx> quasi_interpolate(const SmoothFn& f, double lambda, int k, Interval window) {
  if (!(lambda > 0.0)) throw std::invalid_argument("quasi_interpolate: lambda must be positive");
  if (k < 0 || k > 3) throw std::invalid_argument("quasi_interpolate: degree k must be in {0,1,2,3}");
  if (!(window.hi > window.lo)) throw std::invalid_argument("quasi_interpolate: degenerate window");

  const std::vector<double> psi = dual_poly(k);
  const double tau0 = 0.5 * (k + 1);  // support midpoint on unit knots
  const double kfact = factorial(k);
  std::vector<double> psi_d(k + 1);  // psi_0^{(k-r)}(tau0)
  for (int r = 0; r <= k; ++r) psi_d[r] = poly_deriv_at(psi, k - r, tau0);

  // knots whose support [j, j+k+1] meets window/lambda (closed intersection)
  const long j_lo = static_cast<long>(std::ceil(window.lo / lambda - (k + 1) - 1e-12));
  const long j_hi = static_cast<long>(std::floor(window.hi / lambda + 1e-12));

  std::map<long, Cplx> gamma;
  for (long j = j_lo; j <= j_hi; ++j) {
    const double tau = lambda * (j + tau0);
    Cplx acc = 0.0;
    double lam_r = 1.0;
    for (int r = 0; r <= k; ++r) {
      const double sign = (r % 2 == 0) ? 1.0 : -1.0;
      acc += sign * psi_d[r] * lam_r * f.deriv(r, tau);
      lam_r *= lambda;
    }
    gamma[j] = acc / kfact;
  }
  return gamma;
}

double MultiscaleExpansion::level_max_abs(int l) const {
  if (l < 1 || l > max_level()) throw std::invalid_argument("level_max_abs: level out of range");
  double m = 0.0;
  for (const auto& [j, a] : levels[l - 1]) m = std::max(m, std::abs(a));
  return m;
}

MultiscaleExpansion multiscale_expand(int k, int l_max, Interval window) {
  if (l_max < 1 || l_max > 14) throw std::invalid_argument("multiscale_expand: l_max must be in [1,14]");
  if (!(window.hi > window.lo)) throw std::invalid_argument("multiscale_expand: degenerate window");
  MultiscaleExpansion exp;
  exp.k = k;
  exp.window = window;
  // pad so residual derivatives near the window edges see complete
  // coefficient neighborhoods on every coarser level
  const Interval padded{window.lo - 2.0 * (k + 1), window.hi + 2.0 * (k + 1)};
  for (int l = 1; l <= l_max; ++l) {
    const SmoothFn input = (l == 1) ? exponential_fn(1.0) : residual_fn(exp, l - 1);
    exp.levels.push_back(quasi_interpolate(input, std::ldexp(1.0, -l), k, padded));
  }
  return exp;
}

Cplx level_sum_eval(const MultiscaleExpansion& exp, int levels, double x) {
  return level_sum_deriv(exp, levels, 0, x);
}

Cplx level_sum_deriv(const MultiscaleExpansion& exp, int levels, int r, double x) {
  if (levels < 0 || levels > exp.max_level())
    throw std::invalid_argument("level_sum: level count out of range");
  const BSpline n(exp.k);
  Cplx acc = 0.0;
  for (int l = 1; l <= levels; ++l) {
    const double scale = std::ldexp(1.0, l);
    const double t = scale * x;
    const auto& alpha = exp.levels[l - 1];
    const long j_hi = static_cast<long>(std::floor(t + 1e-12));
    const double sr = std::pow(scale, r);
    for (long j = j_hi - exp.k - 1; j <= j_hi; ++j) {
      auto it = alpha.find(j);
      if (it == alpha.end()) continue;
      acc += it->second * sr * n.deriv(r, t - j);
    }
  }
  return acc;
}

SmoothFn residual_fn(const MultiscaleExpansion& exp, int levels) {
  SmoothFn f;
  const MultiscaleExpansion* e = &exp;  // caller keeps the expansion alive
  f.value = [e, levels](double x) { return unit_phase(x) - level_sum_eval(*e, levels, x); };
  f.deriv = [e, levels](int r, double x) {
    return std::pow(Cplx(0.0, 2.0 * kPi), r) * unit_phase(x) - level_sum_deriv(*e, levels, r, x);
  };
  return f;
}

}  // namespace ridgerate
