#include "ridgerate/targets.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "ridgerate/splines.hpp"

namespace ridgerate {

namespace {

double sinc(double t) {
  if (std::abs(t) < 1e-8) {
    const double u = kPi * t;
    return 1.0 - u * u / 6.0;
  }
  return std::sin(kPi * t) / (kPi * t);
}

Cplx atom_fourier(const std::vector<SpectralAtom>& atoms, std::span<const double> xi) {
  Cplx v = 0.0;
  for (const auto& a : atoms) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      const double d = xi[i] - a.freq[i];
      d2 += d * d;
    }
    if (d2 < 1e-18) v += a.weight;
  }
  return v;
}

}  // namespace

TargetFunction make_gaussian(int dim, double sigma, Point center) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_gaussian: unsupported dimension");
  if (!(sigma > 0.0)) throw std::invalid_argument("make_gaussian: sigma must be positive");
  TargetFunction f;
  f.name = "gaussian";
  f.dim = dim;
  f.eval = [dim, sigma, center](std::span<const double> x) -> Cplx {
    double q = 0.0;
    for (int i = 0; i < dim; ++i) q += (x[i] - center[i]) * (x[i] - center[i]);
    return std::exp(-kPi * q / (sigma * sigma));
  };
  f.eval_grad = [f_eval = f.eval, sigma, center](int axis, std::span<const double> x) -> Cplx {
    return -2.0 * kPi * (x[axis] - center[axis]) / (sigma * sigma) * f_eval(x);
  };
  f.fourier = [dim, sigma, center](std::span<const double> xi) -> Cplx {
    double q = 0.0, phase = 0.0;
    for (int i = 0; i < dim; ++i) {
      q += xi[i] * xi[i];
      phase += xi[i] * center[i];
    }
    return std::pow(sigma, dim) * std::exp(-kPi * sigma * sigma * q) * unit_phase(-phase);
  };
  for (int i = 0; i < dim; ++i) {
    f.axis_fourier.push_back([sigma, c = center[i]](double xi) -> Cplx {
      return sigma * std::exp(-kPi * sigma * sigma * xi * xi) * unit_phase(-xi * c);
    });
  }
  f.barron_exponents = {0.0, 1.0, 2.0, 4.0};
  f.exp_barron = ExpBarronParams{0.9, 1.0};
  f.decay_order = 0.0;
  f.truncation_radius = std::max(4.0, 5.0 / sigma);
  f.truncation_tol = 1e-8;
  return f;
}

TargetFunction make_exponential_wave(int dim, Nu integer_freq) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_exponential_wave: unsupported dimension");
  TargetFunction f;
  f.name = "expwave";
  f.dim = dim;
  Point nu{0, 0, 0};
  for (int i = 0; i < dim; ++i) nu[i] = static_cast<double>(integer_freq[i]);
  f.eval = [dim, nu](std::span<const double> x) -> Cplx {
    double phase = 0.0;
    for (int i = 0; i < dim; ++i) phase += nu[i] * x[i];
    return unit_phase(phase);
  };
  f.eval_grad = [f_eval = f.eval, nu](int axis, std::span<const double> x) -> Cplx {
    return 2.0 * kPi * kI * nu[axis] * f_eval(x);
  };
  f.atoms = std::vector<SpectralAtom>{{nu, Cplx(1.0, 0.0)}};
  f.fourier = [atoms = *f.atoms](std::span<const double> xi) { return atom_fourier(atoms, xi); };
  f.barron_exponents = {0.0, 1.0, 2.0, 4.0};
  f.exp_barron = ExpBarronParams{0.9, 1.0};
  f.decay_order = 0.0;
  f.truncation_radius = norm2(std::span<const double>(nu.data(), dim)) + 1.0;
  f.truncation_tol = 1e-12;
  return f;
}

TargetFunction make_cosine_sum(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_cosine_sum: unsupported dimension");
  TargetFunction f;
  f.name = "cossum";
  f.dim = dim;
  f.eval = [](std::span<const double> x) -> Cplx { return std::cos(2.0 * kPi * x[0]); };
  f.eval_grad = [](int axis, std::span<const double> x) -> Cplx {
    if (axis != 0) return 0.0;
    return -2.0 * kPi * std::sin(2.0 * kPi * x[0]);
  };
  std::vector<SpectralAtom> atoms(2);
  atoms[0].freq = {1.0, 0.0, 0.0};
  atoms[0].weight = 0.5;
  atoms[1].freq = {-1.0, 0.0, 0.0};
  atoms[1].weight = 0.5;
  f.atoms = atoms;
  f.fourier = [atoms](std::span<const double> xi) { return atom_fourier(atoms, xi); };
  f.barron_exponents = {0.0, 1.0, 2.0, 4.0};
  f.exp_barron = ExpBarronParams{0.9, 1.0};
  f.decay_order = 0.0;
  f.truncation_radius = 2.0;
  f.truncation_tol = 1e-12;
  return f;
}

TargetFunction make_bump_product(int dim, int r) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_bump_product: unsupported dimension");
  if (r < 2 || r > 4) throw std::invalid_argument("make_bump_product: r must be in {2,3,4}");
  TargetFunction f;
  f.name = "bump" + std::to_string(r);
  f.dim = dim;
  // per-axis factor: r-fold self-convolution of the indicator of [0, 1/r],
  // normalized to unit mass; equals r N_{r-1}(r x) with unit transform at 0
  auto spline = std::make_shared<BSpline>(r - 1);
  auto axis_eval = [spline, r](double x) { return r * (*spline)(r * x); };
  auto axis_deriv = [spline, r](double x) { return static_cast<double>(r) * r * spline->deriv(1, r * x); };
  f.eval = [dim, axis_eval](std::span<const double> x) -> Cplx {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= axis_eval(x[i]);
    return v;
  };
  f.eval_grad = [dim, axis_eval, axis_deriv](int axis, std::span<const double> x) -> Cplx {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= (i == axis) ? axis_deriv(x[i]) : axis_eval(x[i]);
    return v;
  };
  auto axis_hat = [r](double xi) -> Cplx {
    // transform of r chi_{[0,1/r]} is e^{-pi i xi/r} sinc(xi/r); r-fold product
    const Cplx base = unit_phase(-0.5 * xi / r) * sinc(xi / r);
    return std::pow(base, r);
  };
  f.fourier = [dim, axis_hat](std::span<const double> xi) -> Cplx {
    Cplx v = 1.0;
    for (int i = 0; i < dim; ++i) v *= axis_hat(xi[i]);
    return v;
  };
  for (int i = 0; i < dim; ++i) f.axis_fourier.push_back(axis_hat);
  for (int s = 0; s <= r - 2; ++s) f.barron_exponents.push_back(static_cast<double>(s));
  f.decay_order = static_cast<double>(r);
  f.truncation_radius = 400.0;
  f.truncation_tol = 1e-5;
  return f;
}

std::vector<TargetFunction> builtin_targets(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("builtin_targets: unsupported dimension");
  Point center{0.5, 0.5, 0.5};
  std::vector<TargetFunction> out;
  out.push_back(make_gaussian(dim, 1.0, center));
  out.push_back(make_exponential_wave(dim, Nu{1, 0, 0}));
  out.push_back(make_cosine_sum(dim));
  out.push_back(make_bump_product(dim, 3));
  return out;
}

TargetFunction target_by_name(const std::string& name, int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("target_by_name: unsupported dimension");
  const Point center{0.5, 0.5, 0.5};
  if (name == "gaussian") return make_gaussian(dim, 1.0, center);
  if (name == "expwave") return make_exponential_wave(dim, Nu{1, 0, 0});
  if (name == "cossum") return make_cosine_sum(dim);
  if (name == "bump2") return make_bump_product(dim, 2);
  if (name == "bump3") return make_bump_product(dim, 3);
  if (name == "bump4") return make_bump_product(dim, 4);
  throw std::invalid_argument("target_by_name: unknown target '" + name + "'");
}

double barron_norm_estimate(const TargetFunction& f, double s, double radius, double grid_step) {
  if (s < 0.0) throw std::invalid_argument("barron_norm_estimate: s must be >= 0");
  if (!(radius > 0.0) || !(grid_step > 0.0))
    throw std::invalid_argument("barron_norm_estimate: radius and grid_step must be positive");

  if (f.discrete_spectrum()) {
    double total = 0.0;
    for (const auto& a : *f.atoms) {
      const double len = norm2(std::span<const double>(a.freq.data(), f.dim));
      if (len <= radius) total += std::pow(1.0 + len, s) * std::abs(a.weight);
    }
    return total;
  }

  // midpoint Riemann sum over the ball, tracked at radius/4, /2 and full
  // radius so runaway growth across doublings can be detected
  const long per_axis = std::max<long>(1, static_cast<long>(std::ceil(2.0 * radius / grid_step)));
  const double h = 2.0 * radius / per_axis;
  double bucket[3] = {0.0, 0.0, 0.0};  // within R/4, (R/4,R/2], (R/2,R]
  std::vector<double> xi(f.dim, 0.0);
  std::vector<long> idx(f.dim, 0);
  const double cell = std::pow(h, f.dim);
  while (true) {
    double len2 = 0.0;
    for (int i = 0; i < f.dim; ++i) {
      xi[i] = -radius + (idx[i] + 0.5) * h;
      len2 += xi[i] * xi[i];
    }
    const double len = std::sqrt(len2);
    if (len <= radius) {
      const double contrib = std::pow(1.0 + len, s) * std::abs(f.fourier(xi)) * cell;
      if (len <= 0.25 * radius)
        bucket[0] += contrib;
      else if (len <= 0.5 * radius)
        bucket[1] += contrib;
      else
        bucket[2] += contrib;
    }
    int axis = 0;
    while (axis < f.dim && ++idx[axis] == per_axis) idx[axis++] = 0;
    if (axis == f.dim) break;
  }
  const double total = bucket[0] + bucket[1] + bucket[2];
  const double inc1 = bucket[1], inc2 = bucket[2];
  if (inc2 > 0.7 * inc1 && inc2 > 1e-12 + 1e-9 * total)
    throw std::runtime_error("norm estimate diverges");
  return total;
}

}  // namespace ridgerate
