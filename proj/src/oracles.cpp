#include "ridgerate/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ridgerate/gauss.hpp"

namespace ridgerate {

namespace {

// Legendre P_j on [-1,1] by recurrence; returns P_0..P_deg at u.
void legendre_all(int deg, double u, std::span<double> out) {
  out[0] = 1.0;
  if (deg >= 1) out[1] = u;
  for (int j = 2; j <= deg; ++j)
    out[j] = ((2.0 * j - 1.0) * u * out[j - 1] - (j - 1.0) * out[j - 2]) / j;
}

}  // namespace

long QuadratureGrid::size() const {
  long s = 1;
  for (int i = 0; i < dim; ++i) s *= points_per_axis;
  return s;
}

void QuadratureGrid::node(long flat, std::span<double> out) const {
  for (int i = dim - 1; i >= 0; --i) {
    out[i] = axis_nodes[flat % points_per_axis];
    flat /= points_per_axis;
  }
}

double QuadratureGrid::weight(long flat) const {
  double w = 1.0;
  for (int i = 0; i < dim; ++i) {
    w *= axis_weights[flat % points_per_axis];
    flat /= points_per_axis;
  }
  return w;
}

QuadratureGrid tensor_gauss(int dim, int points_per_axis, double side) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("tensor_gauss: unsupported dimension");
  if (points_per_axis < 1) throw std::invalid_argument("tensor_gauss: need at least one point");
  QuadratureGrid g;
  g.dim = dim;
  g.points_per_axis = points_per_axis;
  g.side = side;
  GaussRule r = gauss_legendre(points_per_axis, 0.0, side);
  g.axis_nodes = std::move(r.nodes);
  g.axis_weights = std::move(r.weights);
  return g;
}

EvaluableField field_of(const TargetFunction& f) {
  EvaluableField e;
  e.value = f.eval;
  e.grad = f.eval_grad;
  return e;
}

double hm_norm(const EvaluableField& f, const QuadratureGrid& grid, int m) {
  if (m < 0 || m > 1) throw std::invalid_argument("hm_norm: m must be 0 or 1");
  const long total = grid.size();
  double acc = 0.0;
  std::vector<double> x(grid.dim), xs(grid.dim);
  for (long i = 0; i < total; ++i) {
    grid.node(i, x);
    const double w = grid.weight(i);
    acc += w * std::norm(f.value(x));
    if (m == 1) {
      for (int axis = 0; axis < grid.dim; ++axis) {
        Cplx g;
        if (f.grad) {
          g = f.grad(axis, x);
        } else {
          const double h = 1e-4;
          xs = x;
          xs[axis] = x[axis] + h;
          const Cplx fp = f.value(xs);
          xs[axis] = x[axis] - h;
          const Cplx fm = f.value(xs);
          g = (fp - fm) / (2.0 * h);
        }
        acc += w * std::norm(g);
      }
    }
  }
  return std::sqrt(std::max(0.0, acc));
}

double hm_error(const EvaluableField& a, const EvaluableField& b, const QuadratureGrid& grid, int m) {
  EvaluableField diff;
  diff.value = [&a, &b](std::span<const double> x) { return a.value(x) - b.value(x); };
  if (a.grad && b.grad)
    diff.grad = [&a, &b](int axis, std::span<const double> x) { return a.grad(axis, x) - b.grad(axis, x); };
  return hm_norm(diff, grid, m);
}

Cplx FreeKnotFit::evaluate(double x) const {
  // locate segment (bounds strictly increasing, cover [0,1])
  const int nseg = static_cast<int>(segment_coeffs.size());
  int seg = 0;
  while (seg + 1 < nseg && x > segment_bounds[seg + 1]) ++seg;
  const double lo = segment_bounds[seg], hi = segment_bounds[seg + 1];
  const double u = std::clamp(2.0 * (x - lo) / (hi - lo) - 1.0, -1.0, 1.0);
  double p[4];
  legendre_all(k, u, std::span<double>(p, k + 1));
  Cplx v = 0.0;
  for (int j = 0; j <= k; ++j) v += segment_coeffs[seg][j] * p[j];
  return v;
}

FreeKnotFit free_knot_fit(const std::function<Cplx(double)>& f, int n_breakpoints, int k, int dp_grid) {
  if (k < 0 || k > 3) throw std::invalid_argument("free_knot_fit: degree k must be in {0,1,2,3}");
  if (n_breakpoints < 0) throw std::invalid_argument("free_knot_fit: negative breakpoint count");
  if (n_breakpoints >= dp_grid) throw std::invalid_argument("free_knot_fit: infeasible, n_breakpoints >= dp_grid");
  if (dp_grid < 4 * (n_breakpoints + 1))
    throw std::invalid_argument("free_knot_fit: dp_grid must be at least 4*(n_breakpoints+1)");

  const int g = dp_grid;  // candidate bounds t_i = i/g, i = 0..g
  const int nodes = std::max(8, 2 * k + 4);
  const GaussRule base = gauss_legendre(nodes, 0.0, 1.0);

  // cost[i*(g+1)+j]: squared L2 residual of the degree-k Legendre projection
  // on [t_i, t_j]; computed directly as int |f - p|^2 to avoid cancellation
  const long stride = g + 1;
  std::vector<double> cost(stride * stride, 0.0);
  std::vector<Cplx> proj(stride * stride * (k + 1), Cplx(0.0));
  std::vector<Cplx> fvals(nodes);
  std::vector<std::array<double, 4>> pvals(nodes);
  for (int q = 0; q < nodes; ++q) {
    const double u = 2.0 * base.nodes[q] - 1.0;
    legendre_all(k, u, std::span<double>(pvals[q].data(), k + 1));
  }
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      const double lo = static_cast<double>(i) / g, hi = static_cast<double>(j) / g;
      const double len = hi - lo;
      Cplx c[4] = {0.0, 0.0, 0.0, 0.0};
      for (int q = 0; q < nodes; ++q) {
        fvals[q] = f(lo + base.nodes[q] * len);
        for (int b = 0; b <= k; ++b) c[b] += base.weights[q] * fvals[q] * pvals[q][b];
      }
      for (int b = 0; b <= k; ++b) c[b] *= (2.0 * b + 1.0);  // ||P_b||^2 on [lo,hi] = len/(2b+1)
      double resid = 0.0;
      for (int q = 0; q < nodes; ++q) {
        Cplx p = 0.0;
        for (int b = 0; b <= k; ++b) p += c[b] * pvals[q][b];
        resid += base.weights[q] * len * std::norm(fvals[q] - p);
      }
      cost[i * stride + j] = resid;
      for (int b = 0; b <= k; ++b) proj[(i * stride + j) * (k + 1) + b] = c[b];
    }
  }

  // E[s][j]: best cost of covering [0, t_j] with s segments
  const int segs = n_breakpoints + 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> E(segs + 1, std::vector<double>(g + 1, kInf));
  std::vector<std::vector<int>> from(segs + 1, std::vector<int>(g + 1, -1));
  for (int j = 1; j <= g; ++j) E[1][j] = cost[j];
  for (int s = 2; s <= segs; ++s) {
    for (int j = s; j <= g; ++j) {
      for (int i = s - 1; i < j; ++i) {
        const double v = E[s - 1][i] + cost[i * stride + j];
        if (v < E[s][j]) {
          E[s][j] = v;
          from[s][j] = i;
        }
      }
    }
  }

  FreeKnotFit fit;
  fit.k = k;
  fit.l2_error = std::sqrt(std::max(0.0, E[segs][g]));
  std::vector<int> bounds{g};
  int j = g;
  for (int s = segs; s >= 2; --s) {
    j = from[s][j];
    bounds.push_back(j);
  }
  bounds.push_back(0);
  std::reverse(bounds.begin(), bounds.end());
  for (std::size_t b = 0; b < bounds.size(); ++b)
    fit.segment_bounds.push_back(static_cast<double>(bounds[b]) / g);
  for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
    const long base_idx = (static_cast<long>(bounds[b]) * stride + bounds[b + 1]) * (k + 1);
    fit.segment_coeffs.emplace_back(proj.begin() + base_idx, proj.begin() + base_idx + (k + 1));
  }
  for (std::size_t b = 1; b + 1 < bounds.size(); ++b)
    fit.breakpoints.push_back(static_cast<double>(bounds[b]) / g);
  return fit;
}

Cplx UniformGridFit::evaluate(std::span<const double> x) const {
  long cell_flat = 0;
  double u[3] = {0, 0, 0};
  for (int i = 0; i < dim; ++i) {
    double t = std::clamp(x[i], 0.0, 1.0) * cells;
    int c = std::min(static_cast<int>(t), cells - 1);
    u[i] = 2.0 * (t - c) - 1.0;
    cell_flat = cell_flat * cells + c;
  }
  double p[3][4];
  for (int i = 0; i < dim; ++i) legendre_all(k, u[i], std::span<double>(p[i], k + 1));
  const auto& c = cell_coeffs[cell_flat];
  Cplx v = 0.0;
  long idx = 0;
  // row-major over (k+1)^dim tensor coefficients
  std::array<int, 3> b{0, 0, 0};
  const long nb = c.size();
  for (idx = 0; idx < nb; ++idx) {
    long rem = idx;
    double basis = 1.0;
    for (int i = dim - 1; i >= 0; --i) {
      b[i] = rem % (k + 1);
      rem /= (k + 1);
      basis *= p[i][b[i]];
    }
    v += c[idx] * basis;
  }
  return v;
}

EvaluableField UniformGridFit::field() const {
  EvaluableField e;
  e.value = [this](std::span<const double> x) { return evaluate(x); };
  return e;
}

UniformGridFit uniform_grid_fit(const TargetFunction& f, int cells_per_axis, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("uniform_grid_fit: degree k must be in {0,1,2,3}");
  if (cells_per_axis < 1) throw std::invalid_argument("uniform_grid_fit: need at least one cell");
  UniformGridFit fit;
  fit.dim = f.dim;
  fit.k = k;
  fit.cells = cells_per_axis;
  fit.dof = 1;
  for (int i = 0; i < f.dim; ++i) fit.dof *= static_cast<long>(cells_per_axis) * (k + 1);

  const int nodes = k + 4;
  const GaussRule base = gauss_legendre(nodes, 0.0, 1.0);
  long ncells = 1;
  for (int i = 0; i < f.dim; ++i) ncells *= cells_per_axis;
  const long nb = static_cast<long>(std::pow(k + 1, f.dim));
  const double h = 1.0 / cells_per_axis;

  fit.cell_coeffs.assign(ncells, std::vector<Cplx>(nb, Cplx(0.0)));
  std::vector<double> x(f.dim);
  const long qtotal = static_cast<long>(std::pow(nodes, f.dim));
  for (long cell = 0; cell < ncells; ++cell) {
    std::array<int, 3> ci{0, 0, 0};
    long rem = cell;
    for (int i = f.dim - 1; i >= 0; --i) {
      ci[i] = rem % cells_per_axis;
      rem /= cells_per_axis;
    }
    auto& coeffs = fit.cell_coeffs[cell];
    for (long q = 0; q < qtotal; ++q) {
      long qr = q;
      double wq = 1.0;
      double u[3];
      for (int i = f.dim - 1; i >= 0; --i) {
        const int qi = qr % nodes;
        qr /= nodes;
        x[i] = (ci[i] + base.nodes[qi]) * h;
        u[i] = 2.0 * base.nodes[qi] - 1.0;
        wq *= base.weights[qi];
      }
      const Cplx fv = f.eval(x);
      double p[3][4];
      for (int i = 0; i < f.dim; ++i) legendre_all(k, u[i], std::span<double>(p[i], k + 1));
      for (long bidx = 0; bidx < nb; ++bidx) {
        long br = bidx;
        double basis = 1.0;
        double norm_inv = 1.0;
        for (int i = f.dim - 1; i >= 0; --i) {
          const int bi = br % (k + 1);
          br /= (k + 1);
          basis *= p[i][bi];
          norm_inv *= (2.0 * bi + 1.0);  // 1/||P_b||^2 on unit cell (scaled below)
        }
        coeffs[bidx] += wq * fv * basis * norm_inv;
      }
    }
  }
  return fit;
}

std::pair<double, double> fit_loglog_slope(std::span<const double> n, std::span<const double> err) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(err[i] > 1e-13) || !std::isfinite(err[i])) continue;  // zero/underflow excluded
    lx.push_back(std::log(n[i]));
    ly.push_back(std::log(err[i]));
  }
  if (lx.size() < 2) return {0.0, 0.0};
  const LinearFit f = linear_fit(lx, ly);
  return {f.slope, f.stderr_slope};
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  LinearFit f;
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return f;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ssr += r * r;
  }
  if (n > 2) f.stderr_slope = std::sqrt(ssr / (n - 2) / sxx);
  return f;
}

}  // namespace ridgerate
