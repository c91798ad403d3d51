#pragma once

#include <map>

#include "ridgerate/common.hpp"
#include "ridgerate/targets.hpp"

namespace ridgerate {

// Smooth cutoff phi: identically 1 on [0,1]^d, 0 outside [-eps, L-eps]^d,
// built as the tensor product of 1d mollified box indicators. The mollifier
// is the compactly supported bump g(t) = exp(-(1-t^2)^{1-alpha}) rescaled to
// width eps/4 and the box is [-eps/2, L-3eps/2] per axis.
class CutoffFunction {
 public:
  CutoffFunction(int dim, double L, double eps, double alpha, int mollifier_grid);

  int dim() const { return dim_; }
  double L() const { return L_; }
  double eps() const { return eps_; }
  double alpha() const { return alpha_; }

  double axis_value(double t) const;
  double operator()(std::span<const double> x) const;

 private:
  int dim_;
  double L_, eps_, alpha_;
  std::vector<double> nodes_, weights_;  // mollifier rule on [-1, 1]
  double mass_;                          // quadrature mass of g on [-1, 1]
};

CutoffFunction make_cutoff(int dim, double L, double eps, double alpha, int mollifier_grid);

// Shifted-lattice representation of a target on Omega: coefficients c_nu at
// frequencies a + nu/L, |nu/L| <= truncation_radius, stored sparsely.
struct LatticeExpansion {
  int dim = 1;
  double L = 2.0;
  Point shift{0, 0, 0};
  std::map<Nu, Cplx> coeffs;
  double truncation_radius = 0.0;

  Point frequency(const Nu& nu) const;   // a + nu/L
  double freq_norm(const Nu& nu) const;  // |a + nu/L|
  double lattice_norm(const Nu& nu) const;  // |nu/L|
  Cplx reconstruct(std::span<const double> x) const;
  Cplx reconstruct_grad(int axis, std::span<const double> x) const;
  // sum (1 + |a + xi|)^s |c_xi|
  double weighted_mass(double s) const;
};

// Fourier coefficients of h_f = phi * f over the period-L box via an
// fft_grid^d DFT of h_f(x) e^{-2 pi i a.x}; targets with a declared discrete
// spectrum sitting on the shifted lattice are taken verbatim instead.
LatticeExpansion lattice_coefficients(const TargetFunction& f, const CutoffFunction& cutoff,
                                      Point a, double R, int fft_grid);

// Brute-force realization of the averaging argument: the candidate shift in
// [0, 1/L]^d (candidates per axis, left endpoints) minimizing the weighted
// coefficient mass at exponent s.
Point shift_search(const TargetFunction& f, const CutoffFunction& cutoff, double s, double R,
                   int candidates, int fft_grid);

}  // namespace ridgerate
