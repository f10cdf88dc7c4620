#pragma once

#include <span>

#include "tnes/probability.hpp"

namespace tnes {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;

// Standard normal density.
double std_normal_pdf(double x);

// phi', phi'' or phi''' at x (order 1, 2 or 3).
double std_normal_pdf_deriv(double x, int order);

// Standard normal distribution function (Cody's rational approximations,
// relative accuracy near machine precision in both tails).
Probability std_normal_cdf(double x);

// Upper tail 1 - Phi(x), computed without cancellation.
double std_normal_sf(double x);

// log Phi(x); finite for every finite x.
double std_normal_log_cdf(double x);

// Phi^{-1}(p) for 0 < p < 1. Throws DomainError outside [0, 1] and for the
// infinite quantiles at p = 0 and p = 1.
double std_normal_quantile(double p);

// Phi(hi) - Phi(lo) for lo <= hi, taken from whichever tail keeps it exact.
double normal_mass(double lo, double hi);

// log(Phi(hi) - Phi(lo)) for lo < hi, finite even when the mass underflows.
double log_normal_mass(double lo, double hi);

// log B(a, b).
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b): continued fraction with the usual
// symmetry switch at x = (a + 1) / (a + b + 2), and the power series just past
// the switch when x < 1/2 (where 1 - x would be rounded).
Probability reg_inc_beta(double a, double b, double x);

// Median of Beta(a, b): the root of I_x(a, b) = 1/2.
Probability beta_median(double a, double b);

// Phi^{-1}(beta_median(a, b)), computed from the smaller tail so that it stays
// accurate when the median is within rounding of 0 or 1.
double normal_score_of_beta_median(double a, double b);

// Batched normal_score_of_beta_median. Element i of `out` is bit-identical to
// the scalar call on (a[i], b[i]); the continued fractions run through the
// active SIMD kernel.
void normal_scores_of_beta_medians(std::span<const double> a, std::span<const double> b,
                                   std::span<double> out);

}  // namespace tnes
