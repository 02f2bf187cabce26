#include "subchain/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace subchain {

namespace {

double simpson(double h, double fa, double fm, double fb) {
  return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double adapt(const std::function<double(double)>& f, double lo, double hi,
             double flo, double fmid, double fhi, double whole, double tol,
             int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid);
  const double rm = 0.5 * (mid + hi);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(mid - lo, flo, flm, fmid);
  const double right = simpson(hi - mid, fmid, frm, fhi);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) return left + right + err;
  return adapt(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
         adapt(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol, int max_depth) {
  if (lo == hi) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo);
  const double fmid = f(mid);
  const double fhi = f(hi);
  const double whole = simpson(hi - lo, flo, fmid, fhi);
  return adapt(f, lo, hi, flo, fmid, fhi, whole, abs_tol, max_depth);
}

double integrate_with_breakpoints(const std::function<double(double)>& f,
                                  double lo, double hi,
                                  std::vector<double> breakpoints,
                                  double abs_tol) {
  if (lo == hi) return 0.0;
  std::sort(breakpoints.begin(), breakpoints.end());
  std::vector<double> edges;
  edges.push_back(lo);
  for (double b : breakpoints)
    if (b > lo && b < hi && b > edges.back()) edges.push_back(b);
  edges.push_back(hi);

  const double total = hi - lo;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double panel_tol = abs_tol * (edges[i + 1] - edges[i]) / total;
    sum += integrate_adaptive(f, edges[i], edges[i + 1], panel_tol);
  }
  return sum;
}

}  // namespace subchain
