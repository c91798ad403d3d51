#include "ridgerate/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "ridgerate/fft.hpp"
#include "ridgerate/gauss.hpp"
#include "ridgerate/parallel.hpp"

namespace ridgerate {

void dft_forward(int dim, int n, std::vector<Cplx>& data) {
  static std::mutex plan_mutex;
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= n;
  if (static_cast<long>(data.size()) != total)
    throw std::invalid_argument("dft_forward: data size does not match dimensions");
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    std::vector<int> dims(dim, n);
    plan = fftw_plan_dft(dim, dims.data(), reinterpret_cast<fftw_complex*>(data.data()),
                         reinterpret_cast<fftw_complex*>(data.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("dft_forward: fftw plan creation failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
}

namespace {

double bump_g(double alpha, double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(-std::pow(1.0 - t * t, 1.0 - alpha));
}

}  // namespace

CutoffFunction::CutoffFunction(int dim, double L, double eps, double alpha, int mollifier_grid)
    : dim_(dim), L_(L), eps_(eps), alpha_(alpha) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_cutoff: unsupported dimension");
  if (!(L > 1.0)) throw std::invalid_argument("make_cutoff: L must exceed 1");
  if (!(alpha > 1.0)) throw std::invalid_argument("make_cutoff: alpha must exceed 1");
  if (!(eps > 0.0) || 1.0 + 2.0 * eps >= L)
    throw std::invalid_argument("cutoff geometry infeasible: need 1 + 2*eps < L");
  if (mollifier_grid < 4) throw std::invalid_argument("make_cutoff: mollifier_grid too small");
  GaussRule r = gauss_legendre(mollifier_grid, -1.0, 1.0);
  nodes_ = std::move(r.nodes);
  weights_ = std::move(r.weights);
  mass_ = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) mass_ += weights_[i] * bump_g(alpha_, nodes_[i]);
}

double CutoffFunction::axis_value(double t) const {
  // phi_1(t) = int over y in [-eps/4, eps/4] with t - y in the box
  // [-eps/2, L - 3 eps/2] of the normalized mollifier
  const double half = eps_ / 4.0;
  const double lo = std::max(-half, t - (L_ - 1.5 * eps_));
  const double hi = std::min(half, t + 0.5 * eps_);
  if (lo >= hi) return 0.0;
  if (lo == -half && hi == half) return 1.0;  // interior: full mollifier mass
  // map [lo, hi] into the mollifier's own coordinates (width eps/4 = scale)
  double acc = 0.0;
  const double mid = 0.5 * (lo + hi), stretch = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double y = mid + stretch * nodes_[i];
    acc += stretch * weights_[i] * bump_g(alpha_, y / half);
  }
  return std::clamp(acc / (half * mass_), 0.0, 1.0);
}

double CutoffFunction::operator()(std::span<const double> x) const {
  double v = 1.0;
  for (int i = 0; i < dim_; ++i) {
    v *= axis_value(x[i]);
    if (v == 0.0) return 0.0;
  }
  return v;
}

CutoffFunction make_cutoff(int dim, double L, double eps, double alpha, int mollifier_grid) {
  return CutoffFunction(dim, L, eps, alpha, mollifier_grid);
}

Point LatticeExpansion::frequency(const Nu& nu) const {
  Point f{0, 0, 0};
  for (int i = 0; i < dim; ++i) f[i] = shift[i] + nu[i] / L;
  return f;
}

double LatticeExpansion::freq_norm(const Nu& nu) const {
  const Point f = frequency(nu);
  return norm2(std::span<const double>(f.data(), dim));
}

double LatticeExpansion::lattice_norm(const Nu& nu) const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += (nu[i] / L) * (nu[i] / L);
  return std::sqrt(s);
}

Cplx LatticeExpansion::reconstruct(std::span<const double> x) const {
  Cplx acc = 0.0;
  for (const auto& [nu, c] : coeffs) {
    double phase = 0.0;
    for (int i = 0; i < dim; ++i) phase += (shift[i] + nu[i] / L) * x[i];
    acc += c * unit_phase(phase);
  }
  return acc;
}

Cplx LatticeExpansion::reconstruct_grad(int axis, std::span<const double> x) const {
  Cplx acc = 0.0;
  for (const auto& [nu, c] : coeffs) {
    double phase = 0.0;
    for (int i = 0; i < dim; ++i) phase += (shift[i] + nu[i] / L) * x[i];
    acc += c * unit_phase(phase) * (2.0 * kPi * kI * (shift[axis] + nu[axis] / L));
  }
  return acc;
}

double LatticeExpansion::weighted_mass(double s) const {
  double acc = 0.0;
  for (const auto& [nu, c] : coeffs) acc += std::pow(1.0 + freq_norm(nu), s) * std::abs(c);
  return acc;
}

namespace {

constexpr double kCoeffThreshold = 1e-14;  // sparse storage cut

// All atoms on the shifted lattice a + Z^d/L? Then the expansion is the atom
// list itself (the representation is already in Corollary form).
bool atoms_on_lattice(const TargetFunction& f, const Point& a, double L, std::vector<Nu>* nus) {
  if (!f.discrete_spectrum()) return false;
  for (const auto& atom : *f.atoms) {
    Nu nu{0, 0, 0};
    for (int i = 0; i < f.dim; ++i) {
      const double v = (atom.freq[i] - a[i]) * L;
      const double r = std::round(v);
      if (std::abs(v - r) > 1e-9) return false;
      nu[i] = static_cast<int>(r);
    }
    nus->push_back(nu);
  }
  return true;
}

}  // namespace

LatticeExpansion lattice_coefficients(const TargetFunction& f, const CutoffFunction& cutoff,
                                      Point a, double R, int fft_grid) {
  if (f.dim != cutoff.dim()) throw std::invalid_argument("lattice_coefficients: dimension mismatch");
  if (!(R > 0.0)) throw std::invalid_argument("lattice_coefficients: R must be positive");
  const double L = cutoff.L();
  const int d = f.dim;

  LatticeExpansion out;
  out.dim = d;
  out.L = L;
  out.shift = a;
  out.truncation_radius = R;

  std::vector<Nu> atom_nus;
  if (atoms_on_lattice(f, a, L, &atom_nus)) {
    for (std::size_t i = 0; i < atom_nus.size(); ++i) {
      const Cplx w = (*f.atoms)[i].weight;
      if (std::abs(w) < kCoeffThreshold) continue;
      if (out.lattice_norm(atom_nus[i]) <= R) out.coeffs[atom_nus[i]] += w;
    }
    return out;
  }

  if (fft_grid < 2 || (fft_grid & (fft_grid - 1)) != 0)
    throw std::invalid_argument("lattice_coefficients: fft_grid must be a power of two");
  if (!(R < fft_grid / (2.0 * L)))
    throw std::invalid_argument("aliasing: grid under-resolves radius");

  const int n = fft_grid;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= n;

  // samples of h_f(x) e^{-2 pi i a.x} on the box [-eps, L-eps]^d
  const double eps = cutoff.eps();
  std::vector<double> axis_x(n), axis_phi(n);
  for (int j = 0; j < n; ++j) {
    axis_x[j] = -eps + L * j / n;
    axis_phi[j] = cutoff.axis_value(axis_x[j]);
  }
  std::vector<Cplx> data(total);
  std::vector<double> x(d);
  std::array<long, 3> strides{1, 1, 1};
  for (int i = d - 2; i >= 0; --i) strides[i] = strides[i + 1] * n;
  parallel_for(total, [&](long flat) {
    thread_local std::vector<double> xp;
    xp.resize(d);
    long rem = flat;
    double phi = 1.0, aphase = 0.0;
    for (int i = 0; i < d; ++i) {
      const int ji = static_cast<int>(rem / strides[i]);
      rem %= strides[i];
      xp[i] = axis_x[ji];
      phi *= axis_phi[ji];
      aphase += a[i] * xp[i];
    }
    data[flat] = (phi == 0.0) ? Cplx(0.0) : phi * f.eval(xp) * unit_phase(-aphase);
  });

  dft_forward(d, n, data);

  // c_nu = (L/n)^d e^{2 pi i (nu/L).(eps,...)} DFT[nu mod n]; the shift's
  // share of the box-origin phase is already inside the samples
  const double cell = std::pow(L / n, d);
  const int numax = static_cast<int>(std::floor(R * L));
  std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int i = 0; i < d; ++i) {
    lo[i] = -numax;
    hi[i] = numax;
  }
  Nu nu{0, 0, 0};
  std::vector<Nu> all;
  // enumerate the lattice ball |nu/L| <= R
  std::function<void(int)> rec = [&](int axis) {
    if (axis == d) {
      double len2 = 0.0;
      for (int i = 0; i < d; ++i) len2 += (nu[i] / L) * (nu[i] / L);
      if (len2 <= R * R + 1e-12) all.push_back(nu);
      return;
    }
    for (int v = lo[axis]; v <= hi[axis]; ++v) {
      nu[axis] = v;
      rec(axis + 1);
    }
  };
  rec(0);

  for (const Nu& m : all) {
    long flat = 0;
    double eps_phase = 0.0;
    for (int i = 0; i < d; ++i) {
      const int wrapped = (m[i] % n + n) % n;
      flat += strides[i] * wrapped;
      eps_phase += (a[i] + m[i] / L) * eps;
    }
    const Cplx c = cell * unit_phase(eps_phase) * data[flat];
    if (std::abs(c) >= kCoeffThreshold) out.coeffs[m] = c;
  }
  return out;
}

Point shift_search(const TargetFunction& f, const CutoffFunction& cutoff, double s, double R,
                   int candidates, int fft_grid) {
  if (candidates < 1) throw std::invalid_argument("shift_search: need candidates >= 1");
  const double L = cutoff.L();
  const int d = f.dim;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= candidates;

  std::vector<double> masses(total);
  std::vector<Point> shifts(total);
  for (long flat = 0; flat < total; ++flat) {
    Point a{0, 0, 0};
    long rem = flat;
    for (int i = 0; i < d; ++i) {
      a[i] = static_cast<double>(rem % candidates) / (candidates * L);
      rem /= candidates;
    }
    shifts[flat] = a;
  }
  parallel_for(total, [&](long flat) {
    const LatticeExpansion e = lattice_coefficients(f, cutoff, shifts[flat], R, fft_grid);
    masses[flat] = e.weighted_mass(s);
  });
  long best = 0;
  for (long i = 1; i < total; ++i)
    if (masses[i] < masses[best]) best = i;
  return shifts[best];
}

}  // namespace ridgerate
