#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// where the target supports it, an AVX2 version chosen at runtime. The two
// variants perform the same floating-point operations in the same order, so
// their results are bit-identical (the equivalence tests check this).

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace tnes::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

// Best supported ISA unless overridden (set_isa_override or the TNES_ISA
// environment variable, "scalar" or "avx2").
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

// Convergence threshold and iteration cap of the incomplete-beta continued
// fraction.
inline constexpr double kCfTolerance = 1e-15;
inline constexpr int kCfMaxIterations = 200000;

struct CenteredSums {
  double sww = 0.0;  // sum (w - wbar)^2
  double sxw = 0.0;  // sum (x - xbar)(w - wbar)
};

struct ResidualSums {
  double r = 0.0;   // sum (x - mu - sigma w)
  double rw = 0.0;  // sum (x - mu - sigma w) w
};

// Lentz evaluation of the continued fraction for I_x(a, b) (the factor that
// multiplies x^a (1-x)^b / (a B(a, b))). Lanes that hit the iteration cap get
// NaN. Returns the number of such lanes.
std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out);

double sum(std::span<const double> x);
double sum_sq_standardized(std::span<const double> x, double mu, double sigma);
CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar);
ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma);

namespace scalar {
double incbeta_cf_one(double a, double b, double x);
std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out);
double sum(std::span<const double> x);
double sum_sq_standardized(std::span<const double> x, double mu, double sigma);
CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar);
ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma);
}  // namespace scalar

namespace avx2 {
std::size_t incbeta_cf(std::span<const double> a, std::span<const double> b,
                       std::span<const double> x, std::span<double> out);
double sum(std::span<const double> x);
double sum_sq_standardized(std::span<const double> x, double mu, double sigma);
CenteredSums centered_sums(std::span<const double> x, std::span<const double> w, double xbar,
                           double wbar);
ResidualSums residual_sums(std::span<const double> x, std::span<const double> w, double mu,
                           double sigma);
}  // namespace avx2

}  // namespace tnes::kernels
