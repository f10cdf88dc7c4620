#include <cmath>
#include <limits>

#include "tnes/kernels.hpp"

namespace tnes::kernels::scalar {

namespace {
constexpr double kFpMin = 1e-300;
}

double incbeta_cf_one(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int it = 1; it <= kCfMaxIterations; ++it) {
    const double m = static_cast<double>(it);
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h = h * (d * c);
    aa = -((a + m) * (qab + m)) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h = h * del;
    if (std::fabs(del - 1.0) <= kCfTolerance) return h;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out) {
  std::size_t failed = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = incbeta_cf_one(a[i], b[i], x[i]);
    if (std::isnan(out[i])) ++failed;
  }
  return failed;
}

// The reductions below accumulate into four interleaved partial sums and
// combine them as (s0 + s1) + (s2 + s3). The AVX2 versions keep one partial
// sum per vector lane, which gives the same rounding.

double sum(std::span<const double> x) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) acc[j] = acc[j] + x[i + j];
  }
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] = acc[i - n4] + x[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double sum_sq_standardized(std::span<const double> x, double mu, double sigma) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  auto term = [&](double v) {
    const double z = (v - mu) / sigma;
    return z * z;
  };
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) acc[j] = acc[j] + term(x[i + j]);
  }
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] = acc[i - n4] + term(x[i]);
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar) {
  double sww[4] = {0.0, 0.0, 0.0, 0.0};
  double sxw[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  auto step = [&](std::size_t i, std::size_t lane) {
    const double dw = w[i] - wbar;
    const double dx = x[i] - xbar;
    sww[lane] = sww[lane] + dw * dw;
    sxw[lane] = sxw[lane] + dx * dw;
  };
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) step(i + j, j);
  }
  for (std::size_t i = n4; i < n; ++i) step(i, i - n4);
  return {(sww[0] + sww[1]) + (sww[2] + sww[3]), (sxw[0] + sxw[1]) + (sxw[2] + sxw[3])};
}

ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma) {
  double sr[4] = {0.0, 0.0, 0.0, 0.0};
  double srw[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  auto step = [&](std::size_t i, std::size_t lane) {
    const double r = (x[i] - mu) - sigma * w[i];
    sr[lane] = sr[lane] + r;
    srw[lane] = srw[lane] + r * w[i];
  };
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) step(i + j, j);
  }
  for (std::size_t i = n4; i < n; ++i) step(i, i - n4);
  return {(sr[0] + sr[1]) + (sr[2] + sr[3]), (srw[0] + srw[1]) + (srw[2] + srw[3])};
}

}  // namespace tnes::kernels::scalar
