#pragma once

#include <functional>
#include <vector>

#include "ridgerate/common.hpp"
#include "ridgerate/targets.hpp"

namespace ridgerate {

// Tensor-product Gauss-Legendre rule on [0, side]^dim.
struct QuadratureGrid {
  int dim = 1;
  int points_per_axis = 0;
  double side = 1.0;
  std::vector<double> axis_nodes;
  std::vector<double> axis_weights;

  long size() const;
  void node(long flat, std::span<double> out) const;  // row-major decode
  double weight(long flat) const;
};

QuadratureGrid tensor_gauss(int dim, int points_per_axis, double side = 1.0);

// Anything we can measure: a value map plus an optional analytic gradient.
// Without a gradient, H^1 norms fall back to central differences (h = 1e-4).
struct EvaluableField {
  std::function<Cplx(std::span<const double>)> value;
  std::function<Cplx(int, std::span<const double>)> grad;  // may be empty
};

EvaluableField field_of(const TargetFunction& f);

// sqrt( sum_{|gamma|<=m} int |d^gamma f|^2 ) over the grid's box, m in {0,1}.
double hm_norm(const EvaluableField& f, const QuadratureGrid& grid, int m);

// Convenience: hm_norm of (a - b).
double hm_error(const EvaluableField& a, const EvaluableField& b, const QuadratureGrid& grid, int m);

// Best piecewise degree-k L2 fit on [0,1] with n free breakpoints restricted
// to a uniform candidate grid, found exactly by dynamic programming.
struct FreeKnotFit {
  int k = 0;
  std::vector<double> breakpoints;                 // interior, strictly increasing
  std::vector<std::vector<Cplx>> segment_coeffs;   // Legendre basis per segment
  std::vector<double> segment_bounds;              // size segments+1, includes 0 and 1
  double l2_error = 0.0;

  Cplx evaluate(double x) const;
};

FreeKnotFit free_knot_fit(const std::function<Cplx(double)>& f, int n_breakpoints, int k, int dp_grid);

// Per-cell tensor L2 projection of degree <= k per axis on a uniform grid of
// cells^dim cube cells; the fixed-grid baseline.
struct UniformGridFit {
  int dim = 1, k = 0, cells = 1;
  long dof = 0;
  std::vector<std::vector<Cplx>> cell_coeffs;  // row-major cells, tensor Legendre coeffs

  Cplx evaluate(std::span<const double> x) const;
  EvaluableField field() const;
};

UniformGridFit uniform_grid_fit(const TargetFunction& f, int cells_per_axis, int k);

// Least-squares slope of log(err) vs log(n), excluding zero/underflow rows.
// Returns {slope, stderr}.
std::pair<double, double> fit_loglog_slope(std::span<const double> n, std::span<const double> err);

// Plain linear regression y on x: returns {slope, intercept, r_squared}.
struct LinearFit {
  double slope = 0.0, intercept = 0.0, r_squared = 0.0, stderr_slope = 0.0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace ridgerate
