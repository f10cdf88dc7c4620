#include "tnes/specfns.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tnes/errors.hpp"
#include "tnes/kernels.hpp"

namespace tnes {

namespace {

// W. J. Cody, "Rational Chebyshev approximations for the error function"
// (Math. Comp. 1969), in the arrangement used by R's pnorm_both.
constexpr double kA[5] = {2.2352520354606839287, 161.02823106855587881, 1067.6894854603709582,
                          18154.981253343561249, 0.065682337918207449113};
constexpr double kB[4] = {47.20258190468824187, 976.09855173777669322, 10260.932208618978205,
                          45507.789335026729956};
constexpr double kC[9] = {0.39894151208813466764, 8.8831497943883759412, 93.506656132177855979,
                          597.27027639480026226,  2494.5375852903726711, 6848.1904505362823326,
                          11602.651437647350124,  9842.7148383839780218, 1.0765576773720192317e-8};
constexpr double kD[8] = {22.266688044328115691, 235.38790178262499861, 1519.377599407554805,
                          6485.558298266760755,  18615.571640885098091, 34900.952721145977266,
                          38912.003286093271411, 19685.429676859990727};
constexpr double kP[6] = {0.21589853405795699,     0.1274011611602473639, 0.022235277870649807,
                          0.001421619193227893466, 2.9112874951168792e-5, 0.02307344176494017303};
constexpr double kQ[5] = {1.28426009614491121, 0.468238212480865118, 0.0659881378689285515,
                          0.00378239633202758244, 7.29751555083966205e-5};

constexpr double kSqrt32 = 5.656854249492380195206754896838;
constexpr double kSplit = 0.67448975;
constexpr double kTinyX = DBL_EPSILON * 0.5;

struct Tails {
  double lower;  // Phi(x)
  double upper;  // 1 - Phi(x)
};

// Rational factor of the far-tail branch: Phi(-y) = exp(-y^2/2) * tail_factor(y).
double tail_factor(double y) {
  const double xsq = 1.0 / (y * y);
  double xnum = kP[5] * xsq;
  double xden = xsq;
  for (int i = 0; i < 4; ++i) {
    xnum = (xnum + kP[i]) * xsq;
    xden = (xden + kQ[i]) * xsq;
  }
  double temp = xsq * (xnum + kP[4]) / (xden + kQ[4]);
  return (kInvSqrt2Pi - temp) / y;
}

// exp(-y^2/2) split as exp(-ys^2/2) exp(-(y-ys)(y+ys)/2) with ys = y rounded
// down to a multiple of 1/16, which keeps the exponent exact.
double gauss_exp(double y) {
  const double ys = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ys) * (y + ys);
  return std::exp(-ys * ys * 0.5) * std::exp(-del * 0.5);
}

double log_gauss_exp(double y) {
  const double ys = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ys) * (y + ys);
  return -ys * ys * 0.5 - del * 0.5;
}

Tails pnorm_both(double x) {
  const double y = std::fabs(x);
  if (y <= kSplit) {
    double xnum = 0.0;
    double xden = 0.0;
    if (y > kTinyX) {
      const double xsq = x * x;
      xnum = kA[4] * xsq;
      xden = xsq;
      for (int i = 0; i < 3; ++i) {
        xnum = (xnum + kA[i]) * xsq;
        xden = (xden + kB[i]) * xsq;
      }
    }
    const double temp = x * (xnum + kA[3]) / (xden + kB[3]);
    return {0.5 + temp, 0.5 - temp};
  }
  double small;
  if (y <= kSqrt32) {
    double xnum = kC[8] * y;
    double xden = y;
    for (int i = 0; i < 7; ++i) {
      xnum = (xnum + kC[i]) * y;
      xden = (xden + kD[i]) * y;
    }
    small = gauss_exp(y) * ((xnum + kC[7]) / (xden + kD[7]));
  } else {
    small = gauss_exp(y) * tail_factor(y);
  }
  if (x > 0.0) return {1.0 - small, small};
  return {small, 1.0 - small};
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

// AS 241 (Wichura 1988), PPND16.
double as241(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((r * 5226.495278852545925 + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                0.24178072517745061177) * r + 1.27045825245236838258) * r +
              3.64784832476320460504) * r + 5.7694972214606914055) * r +
            4.6303378461565452959) * r + 1.42343711074968357734) /
          (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                0.0151986665636164571966) * r + 0.14810397642748007459) * r +
              0.68976733498510000455) * r + 1.6763848301838038494) * r +
            2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                0.0012426609473880784386) * r + 0.026532189526576123093) * r +
              0.29656057182850489123) * r + 1.7848265399172913358) * r +
            5.4637849111641143699) * r + 6.6579046435011037772) /
          (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
              0.0148753612908506148525) * r + 0.13692988092273580531) * r +
            0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -val : val;
}

// log(1 + t) - t without cancellation for small t.
double log1pmx(double t) {
  if (std::fabs(t) >= 0.5) return std::log1p(t) - t;
  const double r = t / (2.0 + t);
  const double r2 = r * r;
  double term = r2;
  double acc = 0.0;
  for (int k = 3; k < 200; k += 2) {
    const double add = term / k;
    acc += add;
    if (std::fabs(add) <= 1e-17 * std::fabs(acc)) break;
    term *= r2;
  }
  return -r * t + 2.0 * r * acc;
}

// lgamma(z) minus its Stirling approximation (z - 1/2) log z - z + log sqrt(2 pi).
double stirling_delta(double z) {
  if (z >= 10.0) {
    const double r = 1.0 / z;
    const double r2 = r * r;
    return r * (1.0 / 12.0 -
                r2 * (1.0 / 360.0 -
                      r2 * (1.0 / 1260.0 -
                            r2 * (1.0 / 1680.0 -
                                  r2 * (1.0 / 1188.0 - r2 * (691.0 / 360360.0 - r2 / 156.0))))));
  }
  return std::lgamma(z) - ((z - 0.5) * std::log(z) - z + kLogSqrt2Pi);
}

// log(x^a y^b / B(a, b)) with y = 1 - x, written around the mode of the
// integrand so that large a and b lose nothing to cancellation. The offsets
// from the mode are taken from the smaller of x and y and mirrored, so the
// linear terms a t1 + b t2 cancel exactly.
double log_power_terms(double a, double b, double x, double y) {
  const double s = a + b;
  const double x0 = a / s;
  const double y0 = b / s;
  const double dx = x <= y ? x - x0 : -(y - y0);
  const double t1 = dx / x0;
  const double t2 = -dx / y0;
  return a * log1pmx(t1) + b * log1pmx(t2) + 0.5 * std::log(a * (b / s)) - kLogSqrt2Pi -
         stirling_delta(a) - stirling_delta(b) + stirling_delta(s);
}

// How I_x(a, b) is evaluated. Below the symmetry point the continued fraction
// for I_x(a, b); above it, the continued fraction for I_{1-x}(b, a). When
// x < 1/2 the complement 1 - x is rounded, which shifts the result by about
// density * 1e-16; where that density is not negligible the positive-term
// series in x is summed instead.
enum class IbetaMethod { kCf, kCfFlipped, kSeries };

struct CfArgs {
  double a, b, x;
  IbetaMethod method;
};

// log_front is log_power_terms(a, b, x, y).
CfArgs cf_args(double a, double b, double x, double y, double log_front) {
  if (x < (a + 1.0) / (a + b + 2.0)) return {a, b, x, IbetaMethod::kCf};
  // x^a y^b / B(a, b) >= 1e-6 x means a density above 1e-6 / y
  if (x < 0.5 && log_front >= std::log(x) - 13.8) return {a, b, x, IbetaMethod::kSeries};
  return {b, a, y, IbetaMethod::kCfFlipped};
}

constexpr int kSeriesMaxTerms = 1000000;

// sum_k prod_{j<k} (a + b + j) x / (a + 1 + j), the factor that multiplies
// x^a (1-x)^b / (a B(a, b)). NaN if it has not settled after the cap.
double incbeta_series(double a, double b, double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const double ratio = (a + b + k) * x / (a + 1.0 + k);
    term *= ratio;
    sum += term;
    if (ratio < 1.0 && term <= 1e-17 * sum) return sum;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// I_x(a, b) from the continued fraction (or series) value and the shared
// prefactor.
double ibeta_from_cf(const CfArgs& args, double log_front, double cf) {
  const double front = std::exp(log_front);
  if (args.method != IbetaMethod::kCfFlipped) return front * cf / args.a;
  return 1.0 - front * cf / args.a;
}

void check_shape(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("beta shape parameters must be positive and finite");
  }
}

// Newton iteration for the median of Beta(a, b), a <= b, safeguarded by the
// bracket [lo, hi]. Several solves advance in lockstep so the continued
// fractions can be evaluated together.
struct MedianSolve {
  double a = 1.0;
  double b = 1.0;
  double x = 0.5;
  double lo = 0.0;
  double hi = 0.5;
  double last_f = 1.0;
  int iterations = 0;
  bool done = false;
};

constexpr int kMedianMaxIterations = 200;
// Newton converges quadratically here (the relative curvature of I_x near the
// median is O(1 / x)), so once a step is below 1e-9 x the error left after it
// is far below rounding.
constexpr double kMedianStepTol = 1e-9;

void median_update(MedianSolve& s, double value, double log_front) {
  const double f = value - 0.5;
  s.last_f = f;
  ++s.iterations;
  if (f == 0.0) {
    s.done = true;
    return;
  }
  if (f > 0.0) {
    s.hi = s.x;
  } else {
    s.lo = s.x;
  }
  const double y = 1.0 - s.x;
  const double log_density = log_front - std::log(s.x) - std::log(y);
  const double step = f / std::exp(log_density);
  double next = s.x - step;
  if (std::fabs(step) <= kMedianStepTol * s.x) {
    if (next > s.lo && next < s.hi) s.x = next;
    s.done = true;
    return;
  }
  if (!(next > s.lo && next < s.hi)) {
    next = (s.lo > 0.0 && s.hi > 8.0 * s.lo) ? std::sqrt(s.lo * s.hi) : 0.5 * (s.lo + s.hi);
  }
  s.x = next;
  if (s.hi - s.lo <= 4.0 * DBL_EPSILON * s.hi) s.done = true;
}

// Medians of Beta(a[i], b[i]) with a[i] < b[i]; results in x.
void lower_medians(std::span<const double> a, std::span<const double> b, std::span<double> x) {
  const std::size_t n = a.size();
  std::vector<MedianSolve> solves(n);
  for (std::size_t i = 0; i < n; ++i) {
    MedianSolve& s = solves[i];
    s.a = a[i];
    s.b = b[i];
    // Kerman (2011): (a - 1/3) / (a + b - 2/3) is within a few percent of the
    // median once both shapes are at least 1.
    s.x = (a[i] >= 1.0 && b[i] >= 1.0) ? (a[i] - 1.0 / 3.0) / (a[i] + b[i] - 2.0 / 3.0)
                                        : a[i] / (a[i] + b[i]);
  }
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  std::vector<double> ca, cb, cx, cf;
  std::vector<CfArgs> args;
  std::vector<double> fronts;
  while (!active.empty()) {
    const std::size_t m = active.size();
    ca.resize(m);
    cb.resize(m);
    cx.resize(m);
    cf.resize(m);
    args.resize(m);
    fronts.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      const MedianSolve& s = solves[active[j]];
      const double y = 1.0 - s.x;
      fronts[j] = log_power_terms(s.a, s.b, s.x, y);
      args[j] = cf_args(s.a, s.b, s.x, y, fronts[j]);
      ca[j] = args[j].a;
      cb[j] = args[j].b;
      cx[j] = args[j].x;
    }
    // series lanes are few; they are summed here and the rest go to the kernel
    std::size_t nk = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (args[j].method == IbetaMethod::kSeries) continue;
      ca[nk] = ca[j];
      cb[nk] = cb[j];
      cx[nk] = cx[j];
      ++nk;
    }
    kernels::incbeta_cf(std::span<const double>(ca.data(), nk),
                        std::span<const double>(cb.data(), nk),
                        std::span<const double>(cx.data(), nk), std::span<double>(cf.data(), nk));
    for (std::size_t j = m, k = nk; j-- > 0;) {
      cf[j] = args[j].method == IbetaMethod::kSeries ? incbeta_series(args[j].a, args[j].b, args[j].x)
                                                     : cf[--k];
    }
    std::size_t kept = 0;
    for (std::size_t j = 0; j < m; ++j) {
      MedianSolve& s = solves[active[j]];
      if (std::isnan(cf[j])) {
        throw NumericalError("incomplete beta evaluation did not converge",
                             std::fabs(s.last_f));
      }
      median_update(s, ibeta_from_cf(args[j], fronts[j], cf[j]), fronts[j]);
      if (!s.done && s.iterations >= kMedianMaxIterations) {
        throw NumericalError("beta median iteration did not converge", std::fabs(s.last_f));
      }
      if (!s.done) active[kept++] = active[j];
    }
    active.resize(kept);
  }
  for (std::size_t i = 0; i < n; ++i) x[i] = solves[i].x;
}

}  // namespace

double std_normal_pdf(double x) {
  require_finite(x, "std_normal_pdf");
  return kInvSqrt2Pi * gauss_exp(std::fabs(x));
}

double std_normal_pdf_deriv(double x, int order) {
  require_finite(x, "std_normal_pdf_deriv");
  const double f = std_normal_pdf(x);
  switch (order) {
    case 1:
      return -x * f;
    case 2:
      return (x * x - 1.0) * f;
    case 3:
      return (3.0 * x - x * x * x) * f;
    default:
      throw DomainError("std_normal_pdf_deriv: order must be 1, 2 or 3");
  }
}

Probability std_normal_cdf(double x) {
  if (std::isnan(x)) throw DomainError("std_normal_cdf: NaN argument");
  if (std::isinf(x)) return Probability(x > 0.0 ? 1.0 : 0.0);
  return Probability(pnorm_both(x).lower);
}

double std_normal_sf(double x) {
  if (std::isnan(x)) throw DomainError("std_normal_sf: NaN argument");
  if (std::isinf(x)) return x > 0.0 ? 0.0 : 1.0;
  return pnorm_both(x).upper;
}

double std_normal_log_cdf(double x) {
  if (std::isnan(x)) throw DomainError("std_normal_log_cdf: NaN argument");
  if (x == std::numeric_limits<double>::infinity()) return 0.0;
  if (x == -std::numeric_limits<double>::infinity()) {
    return -std::numeric_limits<double>::infinity();
  }
  if (x > 5.0) return std::log1p(-pnorm_both(x).upper);
  if (x >= -kSqrt32) return std::log(pnorm_both(x).lower);
  const double y = -x;
  return log_gauss_exp(y) + std::log(tail_factor(y));
}

double std_normal_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("std_normal_quantile: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) throw InfiniteQuantileError("std_normal_quantile: p is 0 or 1");
  if (p == 0.5) return 0.0;
  double x = as241(p);
  // Two Halley corrections against the Cody distribution function.
  for (int it = 0; it < 2; ++it) {
    const double dens = kInvSqrt2Pi * gauss_exp(std::fabs(x));
    if (!(dens > 0.0)) break;
    const Tails t = pnorm_both(x);
    const double e = p < 0.5 ? t.lower - p : (1.0 - p) - t.upper;
    const double u = e / dens;
    x = x - u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double normal_mass(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw DomainError("normal_mass: need lo <= hi");
  }
  if (hi <= 0.0) return std_normal_cdf(hi) - std_normal_cdf(lo);
  if (lo >= 0.0) return std_normal_sf(lo) - std_normal_sf(hi);
  return 0.5 * (std::erf(hi / std::sqrt(2.0)) - std::erf(lo / std::sqrt(2.0)));
}

double log_normal_mass(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
    throw DomainError("log_normal_mass: need lo < hi");
  }
  const double mass = normal_mass(lo, hi);
  if (mass > 1e-300) return std::log(mass);
  if (lo >= 0.0) return log_normal_mass(-hi, -lo);
  const double lh = std_normal_log_cdf(hi);
  const double ll = std_normal_log_cdf(lo);
  return lh + std::log1p(-std::exp(ll - lh));
}

double log_beta(double a, double b) {
  check_shape(a, b);
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

Probability reg_inc_beta(double a, double b, double x) {
  check_shape(a, b);
  const Probability px(x);
  if (px == 0.0) return Probability(0.0);
  if (px == 1.0) return Probability(1.0);
  const double y = 1.0 - x;
  const double log_front = log_power_terms(a, b, x, y);
  const CfArgs args = cf_args(a, b, x, y, log_front);
  const double cf = args.method == IbetaMethod::kSeries
                        ? incbeta_series(args.a, args.b, args.x)
                        : kernels::scalar::incbeta_cf_one(args.a, args.b, args.x);
  if (std::isnan(cf)) {
    throw NumericalError("incomplete beta evaluation did not converge", 1.0);
  }
  const double v = ibeta_from_cf(args, log_front, cf);
  return Probability(std::clamp(v, 0.0, 1.0));
}

Probability beta_median(double a, double b) {
  check_shape(a, b);
  if (a == b) return Probability(0.5);
  double m;
  if (a < b) {
    lower_medians(std::span<const double>(&a, 1), std::span<const double>(&b, 1),
                  std::span<double>(&m, 1));
    return Probability(m);
  }
  lower_medians(std::span<const double>(&b, 1), std::span<const double>(&a, 1),
                std::span<double>(&m, 1));
  return Probability(1.0 - m);
}

double normal_score_of_beta_median(double a, double b) {
  double out;
  normal_scores_of_beta_medians(std::span<const double>(&a, 1), std::span<const double>(&b, 1),
                                std::span<double>(&out, 1));
  return out;
}

void normal_scores_of_beta_medians(std::span<const double> a, std::span<const double> b,
                                   std::span<double> out) {
  if (a.size() != b.size() || a.size() != out.size()) {
    throw ContractError("normal_scores_of_beta_medians: length mismatch");
  }
  std::vector<double> la, lb, lm;
  std::vector<std::size_t> idx;
  la.reserve(a.size());
  lb.reserve(a.size());
  idx.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_shape(a[i], b[i]);
    if (a[i] == b[i]) {
      out[i] = 0.0;
      continue;
    }
    la.push_back(std::min(a[i], b[i]));
    lb.push_back(std::max(a[i], b[i]));
    idx.push_back(i);
  }
  lm.resize(la.size());
  lower_medians(la, lb, lm);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const std::size_t i = idx[j];
    const double z = std_normal_quantile(lm[j]);
    out[i] = a[i] < b[i] ? z : -z;
  }
}

}  // namespace tnes
