#ifndef AIRCOMP_SCALAR_SEARCH_HPP
#define AIRCOMP_SCALAR_SEARCH_HPP

#include <cmath>
#include <functional>
#include <string>

#include "aircomp/errors.hpp"

namespace aircomp::scalar {

struct BisectResult {
  double root = 0.0;
  int iterations = 0;
};

/// Bisection for a sign change of f on [lo, hi]. f(lo) and f(hi) must have
/// opposite signs (or one of them is zero). Stops once the bracket width is
/// below rel_tol * |midpoint| (or abs_floor) and throws SolverFailure if that
/// takes more than max_iter halvings.
inline BisectResult bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                           int max_iter, double abs_floor = 0.0) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0};
  if (f_hi == 0.0) return {hi, 0};
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw SolverFailure("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] does not contain a sign change");
  }
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return {mid, it};
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, it};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    const double width = hi - lo;
    if (width <= rel_tol * std::abs(0.5 * (lo + hi)) || width <= abs_floor) {
      return {0.5 * (lo + hi), it};
    }
  }
  throw SolverFailure("bisection did not converge within " + std::to_string(max_iter) + " iterations");
}

struct GoldenResult {
  double argmin = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section minimization of a unimodal f on [lo, hi], stopping when the
/// bracket width falls below rel_tol * |center|.
inline GoldenResult golden_section(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                   int max_iter = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (it < max_iter && (hi - lo) > rel_tol * std::abs(0.5 * (lo + hi))) {
    ++it;
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc <= fd ? GoldenResult{c, fc, it} : GoldenResult{d, fd, it};
}

}  // namespace aircomp::scalar

#endif  // AIRCOMP_SCALAR_SEARCH_HPP
