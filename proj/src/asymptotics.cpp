#include "tnes/asymptotics.hpp"

#include <cmath>

#include "tnes/errors.hpp"
#include "tnes/quadrature.hpp"
#include "tnes/specfns.hpp"

namespace tnes {

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Matrix2 transpose(const Matrix2& m) { return {m.a11, m.a21, m.a12, m.a22}; }

double det(const Matrix2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

Matrix2 inverse(const Matrix2& m) {
  const double d = det(m);
  if (!(std::fabs(d) > 0.0) || !std::isfinite(d)) throw InvariantError("singular 2x2 matrix");
  return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

double det(const Matrix4& m) {
  // Gaussian elimination with partial pivoting on a copy.
  Matrix4 a = m;
  double d = 1.0;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    }
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

SystemValue limiting_system(const TnParams& theta, const TnParams& theta0, double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("limiting_system: quad_tol must be positive");
  const StdMoments m0 = std_moments(theta0.tau_l_star(), theta0.tau_u_star());
  const StdMoments m = std_moments(theta.tau_l_star(), theta.tau_u_star());
  const double l0 = theta0.tau_l_star(), u0 = theta0.tau_u_star();
  const double l = theta.tau_l_star(), u = theta.tau_u_star();
  auto integrand = [&](double t) {
    const double x0 = theta0.mu() + theta0.sigma() * std_tn_quantile(l0, u0, t);
    return x0 * std_tn_quantile(l, u, t);
  };
  const QuadResult q = integrate(integrand, 0.0, 1.0, quad_tol, 0.0);
  SystemValue v;
  v.eq_mu = theta0.mu() + theta0.sigma() * m0.alpha1 - theta.mu() - theta.sigma() * m.alpha1;
  v.eq_sigma = q.value - theta.mu() * m.alpha1 - theta.sigma() * m.alpha2;
  v.eq_tau_l = theta0.tau_l() - theta.tau_l();
  v.eq_tau_u = theta0.tau_u() - theta.tau_u();
  return v;
}

Probability bound_limit_cdf(double x, BoundSide side) {
  if (std::isnan(x)) throw DomainError("bound_limit_cdf: NaN argument");
  if (side == BoundSide::kUpper) {
    return Probability(x <= 1.0 ? std::exp(x - 1.0) : 1.0);
  }
  return Probability(x >= -1.0 ? -std::expm1(-(x + 1.0)) : 0.0);
}

Matrix2 moment_matrix(const TnParams& theta0) {
  const StdMoments m = std_moments(theta0.tau_l_star(), theta0.tau_u_star());
  const double v = m.alpha2 - m.alpha1 * m.alpha1;
  const double c = m.alpha3 - m.alpha1 * m.alpha2;
  const double w = m.alpha4 - m.alpha2 * m.alpha2;
  return {v, c, 0.5 * c, 0.5 * w};
}

Matrix2 sigma_matrix(const TnParams& theta0) {
  const StdMoments m = std_moments(theta0.tau_l_star(), theta0.tau_u_star());
  const double s2 = theta0.sigma() * theta0.sigma();
  const double s11 = s2 * (m.alpha2 - m.alpha1 * m.alpha1);
  const double s12 = 0.5 * s2 * (m.alpha3 - m.alpha1 * m.alpha2);
  const double s22 = 0.25 * s2 * (m.alpha4 - m.alpha2 * m.alpha2);
  return {s11, s12, s12, s22};
}

Matrix4 jacobian(const TnParams& theta0) {
  const Matrix2 mm = moment_matrix(theta0);
  const double s0 = theta0.sigma();
  const double l = theta0.tau_l_star();
  const double u = theta0.tau_u_star();
  const double d = normal_mass(l, u);
  const double pl = std_normal_pdf(l), pu = std_normal_pdf(u);
  const double p1l = std_normal_pdf_deriv(l, 1), p1u = std_normal_pdf_deriv(u, 1);
  const double p2l = std_normal_pdf_deriv(l, 2), p2u = std_normal_pdf_deriv(u, 2);
  const double dphi = pu - pl;
  const double dphi1 = p1u - p1l;
  const double d2 = d * d;
  // Sensitivities of the first two components to the bounds, before the
  // 1 / sigma0 chain factor.
  const double mu_by_u = -s0 * (-p1u * d + pu * dphi) / d2;
  const double mu_by_l = -s0 * (p1l * d - pl * dphi) / d2;
  const double sg_by_u = -0.5 * s0 * p2u / d + 0.5 * s0 * pu * dphi1 / d2;
  const double sg_by_l = 0.5 * s0 * p2l / d - 0.5 * s0 * pl * dphi1 / d2;
  Matrix4 j{};
  j[0] = {-mm.a11, -mm.a12, mu_by_l / s0, mu_by_u / s0};
  j[1] = {-mm.a21, -mm.a22, sg_by_l / s0, sg_by_u / s0};
  j[2] = {0.0, 0.0, -1.0, 0.0};
  j[3] = {0.0, 0.0, 0.0, -1.0};
  return j;
}

Matrix4 jacobian_fd(const TnParams& theta0, double step, double quad_tol) {
  if (!(step > 0.0)) throw DomainError("jacobian_fd: step must be positive");
  const double base[4] = {theta0.mu(), theta0.sigma(), theta0.tau_l(), theta0.tau_u()};
  Matrix4 j{};
  for (int c = 0; c < 4; ++c) {
    double up[4], dn[4];
    for (int k = 0; k < 4; ++k) up[k] = dn[k] = base[k];
    up[c] += step;
    dn[c] -= step;
    const SystemValue fu = limiting_system(TnParams(up[0], up[1], up[2], up[3]), theta0, quad_tol);
    const SystemValue fd = limiting_system(TnParams(dn[0], dn[1], dn[2], dn[3]), theta0, quad_tol);
    const double du[4] = {fu.eq_mu, fu.eq_sigma, fu.eq_tau_l, fu.eq_tau_u};
    const double dd[4] = {fd.eq_mu, fd.eq_sigma, fd.eq_tau_l, fd.eq_tau_u};
    for (int r = 0; r < 4; ++r) j[r][c] = (du[r] - dd[r]) / (2.0 * step);
  }
  return j;
}

LimitCov musigma_limit_cov(const TnParams& theta0) {
  LimitCov out;
  out.sigma_mat = sigma_matrix(theta0);
  out.gamma_mat = inverse(moment_matrix(theta0));
  Matrix2 c = out.gamma_mat * out.sigma_mat * transpose(out.gamma_mat);
  // Symmetrize away rounding.
  const double off = 0.5 * (c.a12 + c.a21);
  c.a12 = off;
  c.a21 = off;
  out.musigma_cov = c;
  return out;
}

}  // namespace tnes
