#pragma once

#include <array>

#include "tnes/estimating.hpp"
#include "tnes/probability.hpp"
#include "tnes/truncnorm.hpp"

namespace tnes {

struct Matrix2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
Matrix2 transpose(const Matrix2& m);
double det(const Matrix2& m);
Matrix2 inverse(const Matrix2& m);  // InvariantError when singular

// Rows: components (mu, sigma, tau_l, tau_u) of the system; columns: the
// parameters in the same order.
using Matrix4 = std::array<std::array<double, 4>, 4>;
double det(const Matrix4& m);

struct LimitCov {
  Matrix2 sigma_mat;    // covariance of the first two estimating components
  Matrix2 gamma_mat;    // inverse of moment_matrix
  Matrix2 musigma_cov;  // gamma * sigma * gamma^T
};

enum class BoundSide { kLower, kUpper };

inline constexpr double kDefaultQuadTol = 1e-8;

// Limit in probability of the observed system, evaluated at theta when the
// data come from theta0. The second component needs one quadrature on [0, 1].
SystemValue limiting_system(const TnParams& theta, const TnParams& theta0,
                            double quad_tol = kDefaultQuadTol);

// Limit CDFs of n f(tau_u0) (tau_u_hat - tau_u0) (Upper, 1 - Exp(1)) and of
// n f(tau_l0) (tau_l_hat - tau_l0) (Lower, Exp(1) - 1).
Probability bound_limit_cdf(double x, BoundSide side);

// [[a2 - a1^2, a3 - a1 a2], [(a3 - a1 a2) / 2, (a4 - a2^2) / 2]] at theta0's
// standardized bounds.
Matrix2 moment_matrix(const TnParams& theta0);

Matrix2 sigma_matrix(const TnParams& theta0);

// d Psi / d theta at theta = theta0, closed form from the moments.
Matrix4 jacobian(const TnParams& theta0);

// Central differences of limiting_system around theta0.
Matrix4 jacobian_fd(const TnParams& theta0, double step = 1e-4, double quad_tol = 1e-11);

LimitCov musigma_limit_cov(const TnParams& theta0);

}  // namespace tnes
