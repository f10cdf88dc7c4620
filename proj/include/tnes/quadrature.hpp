#pragma once

#include <functional>

namespace tnes {

struct QuadResult {
  double value;
  double abs_error;  // estimated
  int evaluations;
};

// Globally adaptive 21-point Gauss-Kronrod on [a, b]: the interval with the
// largest error estimate is bisected until the total estimate is within
// max(abs_tol, rel_tol * |value|). Throws NumericalError (carrying the
// achieved error) when max_intervals is reached first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol = 0.0, int max_intervals = 2000);

}  // namespace tnes
