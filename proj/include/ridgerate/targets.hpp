#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ridgerate/common.hpp"

namespace ridgerate {

// One atom of a declared discrete spectrum: weight * e^{2 pi i freq . x}.
struct SpectralAtom {
  Point freq{0, 0, 0};
  Cplx weight{0, 0};
};

struct ExpBarronParams {
  double beta = 0.0;  // exponent in e^{c |xi|^beta}
  double c = 0.0;
};

// A test function on [0,1]^d with its analytic Fourier transform under the
// convention f^(xi) = int f(x) e^{-2 pi i xi.x} dx, plus smoothness metadata.
// Values are immutable once built; safe to share across workers.
struct TargetFunction {
  std::string name;
  int dim = 1;

  std::function<Cplx(std::span<const double>)> eval;
  // pointwise transform; for targets with a declared discrete spectrum this
  // answers the atom weight on atoms and zero elsewhere
  std::function<Cplx(std::span<const double>)> fourier;
  // analytic gradient (axis, x); always provided by the builtins
  std::function<Cplx(int, std::span<const double>)> eval_grad;

  std::optional<std::vector<SpectralAtom>> atoms;
  // per-axis 1d transform factors for product-form targets (empty otherwise)
  std::vector<std::function<Cplx(double)>> axis_fourier;

  // s values with finite B^s norm; decay_order r > 0 means |f^| ~ |xi|^{-r}
  // per axis (finite scale), decay_order 0 means faster than any polynomial
  std::vector<double> barron_exponents;
  std::optional<ExpBarronParams> exp_barron;
  double decay_order = 0.0;

  // declared truncation data for inverse-transform consistency checks
  double truncation_radius = 8.0;
  double truncation_tol = 1e-6;

  bool discrete_spectrum() const { return atoms.has_value(); }
};

// The builtin corpus for a given dimension; at least a Gaussian, a pure
// on-lattice exponential, a finite cosine sum, and an r-fold indicator
// convolution product with |xi|^{-r} transform decay per coordinate.
std::vector<TargetFunction> builtin_targets(int dim);

// Lookup by CLI name ("gaussian", "expwave", "cossum", "bump3", ...).
TargetFunction target_by_name(const std::string& name, int dim);

// Direct constructors (also used by the experiment harness).
TargetFunction make_gaussian(int dim, double sigma, Point center);
TargetFunction make_exponential_wave(int dim, Nu integer_freq);
TargetFunction make_cosine_sum(int dim);
TargetFunction make_bump_product(int dim, int r);

// Riemann estimate of int_{|xi|<=radius} (1+|xi|)^s |f^(xi)| dxi (atom sum for
// discrete spectra). Throws "norm estimate diverges" when partial integrals
// keep growing across doubling radii.
double barron_norm_estimate(const TargetFunction& f, double s, double radius, double grid_step);

}  // namespace ridgerate
