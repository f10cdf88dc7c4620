#include <atomic>
#include <cstdlib>
#include <string>

#include "tnes/kernels.hpp"

namespace tnes::kernels {

namespace {

// -1: no override; otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

Isa detect() {
#if defined(TNES_HAVE_AVX2_KERNELS)
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa from_environment_or_detect() {
  if (const char* env = std::getenv("TNES_ISA")) {
    const std::string v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return detect();
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(TNES_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  static const Isa chosen = from_environment_or_detect();
  return chosen;
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && !isa_supported(*isa)) isa = Isa::kScalar;
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

#if defined(TNES_HAVE_AVX2_KERNELS)
#define TNES_DISPATCH(fn, ...) \
  (active_isa() == Isa::kAvx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define TNES_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out) {
  return TNES_DISPATCH(incbeta_cf, a, b, x, out);
}

double sum(std::span<const double> x) { return TNES_DISPATCH(sum, x); }

double sum_sq_standardized(std::span<const double> x, double mu, double sigma) {
  return TNES_DISPATCH(sum_sq_standardized, x, mu, sigma);
}

CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar) {
  return TNES_DISPATCH(centered_sums, x, w, xbar, wbar);
}

ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma) {
  return TNES_DISPATCH(residual_sums, x, w, mu, sigma);
}

#undef TNES_DISPATCH

}  // namespace tnes::kernels
