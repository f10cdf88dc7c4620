// Compiled with -mavx2 only. Never call into this file unless
// isa_supported(Isa::kAvx2) is true.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "tnes/kernels.hpp"

namespace tnes::kernels::avx2 {

namespace {

constexpr double kFpMin = 1e-300;

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// |v| < fpmin ? fpmin : v
inline __m256d floor_tiny(__m256d v) {
  const __m256d fpmin = _mm256_set1_pd(kFpMin);
  const __m256d tiny = _mm256_cmp_pd(abs_pd(v), fpmin, _CMP_LT_OQ);
  return _mm256_blendv_pd(v, fpmin, tiny);
}

// One vector of four continued fractions. Lanes freeze as they converge.
struct Cf4 {
  __m256d a, b, x, qab, qap, qam;
  __m256d c, d, h, active;

  void init(const double* pa, const double* pb, const double* px) {
    const __m256d one = _mm256_set1_pd(1.0);
    a = _mm256_loadu_pd(pa);
    b = _mm256_loadu_pd(pb);
    x = _mm256_loadu_pd(px);
    qab = _mm256_add_pd(a, b);
    qap = _mm256_add_pd(a, one);
    qam = _mm256_sub_pd(a, one);
    c = one;
    d = _mm256_sub_pd(one, _mm256_div_pd(_mm256_mul_pd(qab, x), qap));
    d = floor_tiny(d);
    d = _mm256_div_pd(one, d);
    h = d;
    active = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
  }

  // Returns true while some lane is still iterating.
  bool step(__m256d m, __m256d m2) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d am2 = _mm256_add_pd(a, m2);
    __m256d aa = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(m, _mm256_sub_pd(b, m)), x),
                               _mm256_mul_pd(_mm256_add_pd(qam, m2), am2));
    d = floor_tiny(_mm256_add_pd(one, _mm256_mul_pd(aa, d)));
    c = floor_tiny(_mm256_add_pd(one, _mm256_div_pd(aa, c)));
    d = _mm256_div_pd(one, d);
    h = _mm256_blendv_pd(h, _mm256_mul_pd(h, _mm256_mul_pd(d, c)), active);

    const __m256d num =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_add_pd(a, m), _mm256_add_pd(qab, m)), x);
    aa = _mm256_div_pd(_mm256_xor_pd(num, _mm256_set1_pd(-0.0)),
                       _mm256_mul_pd(am2, _mm256_add_pd(qap, m2)));
    d = floor_tiny(_mm256_add_pd(one, _mm256_mul_pd(aa, d)));
    c = floor_tiny(_mm256_add_pd(one, _mm256_div_pd(aa, c)));
    d = _mm256_div_pd(one, d);
    const __m256d del = _mm256_mul_pd(d, c);
    h = _mm256_blendv_pd(h, _mm256_mul_pd(h, del), active);

    const __m256d done = _mm256_cmp_pd(abs_pd(_mm256_sub_pd(del, one)),
                                       _mm256_set1_pd(kCfTolerance), _CMP_LE_OQ);
    active = _mm256_andnot_pd(done, active);
    return _mm256_movemask_pd(active) != 0;
  }

  void store(double* out) const {
    const __m256d nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
    _mm256_storeu_pd(out, _mm256_blendv_pd(h, nan, active));
  }
};

// Two independent vectors per loop so that the division latency of one
// overlaps the other.
void cf8(const double* pa, const double* pb, const double* px, double* out) {
  Cf4 s0, s1;
  s0.init(pa, pb, px);
  s1.init(pa + 4, pb + 4, px + 4);
  const __m256d two = _mm256_set1_pd(2.0);
  bool more0 = true, more1 = true;
  for (int it = 1; it <= kCfMaxIterations && (more0 || more1); ++it) {
    const __m256d m = _mm256_set1_pd(static_cast<double>(it));
    const __m256d m2 = _mm256_mul_pd(two, m);
    if (more0) more0 = s0.step(m, m2);
    if (more1) more1 = s1.step(m, m2);
  }
  s0.store(out);
  s1.store(out + 4);
}

void cf4(const double* pa, const double* pb, const double* px, double* out) {
  Cf4 s;
  s.init(pa, pb, px);
  const __m256d two = _mm256_set1_pd(2.0);
  for (int it = 1; it <= kCfMaxIterations; ++it) {
    const __m256d m = _mm256_set1_pd(static_cast<double>(it));
    if (!s.step(m, _mm256_mul_pd(two, m))) break;
  }
  s.store(out);
}

}  // namespace

std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) cf8(a.data() + i, b.data() + i, x.data() + i, out.data() + i);
  for (; i + 4 <= n; i += 4) cf4(a.data() + i, b.data() + i, x.data() + i, out.data() + i);
  if (i < n) {
    double ta[4] = {1.0, 1.0, 1.0, 1.0};
    double tb[4] = {1.0, 1.0, 1.0, 1.0};
    double tx[4] = {0.5, 0.5, 0.5, 0.5};
    double to[4];
    for (std::size_t j = 0; i + j < n; ++j) {
      ta[j] = a[i + j];
      tb[j] = b[i + j];
      tx[j] = x[i + j];
    }
    cf4(ta, tb, tx, to);
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = to[j];
  }
  std::size_t failed = 0;
  for (double v : out) {
    if (std::isnan(v)) ++failed;
  }
  return failed;
}

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
  double lanes[4];
  _mm256_storeu_pd(lanes, acc);
  for (std::size_t i = n4; i < n; ++i) lanes[i - n4] = lanes[i - n4] + x[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum_sq_standardized(std::span<const double> x, double mu, double sigma) {
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vsig = _mm256_set1_pd(sigma);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d z = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(x.data() + i), vmu), vsig);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(z, z));
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, acc);
  for (std::size_t i = n4; i < n; ++i) {
    const double z = (x[i] - mu) / sigma;
    lanes[i - n4] = lanes[i - n4] + z * z;
  }
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar) {
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  const __m256d vx = _mm256_set1_pd(xbar);
  const __m256d vw = _mm256_set1_pd(wbar);
  __m256d sww = _mm256_setzero_pd();
  __m256d sxw = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d dw = _mm256_sub_pd(_mm256_loadu_pd(w.data() + i), vw);
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), vx);
    sww = _mm256_add_pd(sww, _mm256_mul_pd(dw, dw));
    sxw = _mm256_add_pd(sxw, _mm256_mul_pd(dx, dw));
  }
  double lw[4];
  double lx[4];
  _mm256_storeu_pd(lw, sww);
  _mm256_storeu_pd(lx, sxw);
  for (std::size_t i = n4; i < n; ++i) {
    const double dw = w[i] - wbar;
    const double dx = x[i] - xbar;
    lw[i - n4] = lw[i - n4] + dw * dw;
    lx[i - n4] = lx[i - n4] + dx * dw;
  }
  return {(lw[0] + lw[1]) + (lw[2] + lw[3]), (lx[0] + lx[1]) + (lx[2] + lx[3])};
}

ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma) {
  const std::size_t n = x.size();
  const std::size_t n4 = n - n % 4;
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vsig = _mm256_set1_pd(sigma);
  __m256d sr = _mm256_setzero_pd();
  __m256d srw = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d wi = _mm256_loadu_pd(w.data() + i);
    const __m256d r = _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(x.data() + i), vmu),
                                    _mm256_mul_pd(vsig, wi));
    sr = _mm256_add_pd(sr, r);
    srw = _mm256_add_pd(srw, _mm256_mul_pd(r, wi));
  }
  double lr[4];
  double lrw[4];
  _mm256_storeu_pd(lr, sr);
  _mm256_storeu_pd(lrw, srw);
  for (std::size_t i = n4; i < n; ++i) {
    const double r = (x[i] - mu) - sigma * w[i];
    lr[i - n4] = lr[i - n4] + r;
    lrw[i - n4] = lrw[i - n4] + r * w[i];
  }
  return {(lr[0] + lr[1]) + (lr[2] + lr[3]), (lrw[0] + lrw[1]) + (lrw[2] + lrw[3])};
}

}  // namespace tnes::kernels::avx2
