#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <functional>
#include <vector>

#include "cvawwr/model.hpp"

namespace oracles {

// Phi(x) through a Taylor/continued-fraction erf evaluation that shares no
// code with the library's erfc-based routine. Good to ~1e-15 for |x| <= 6.
inline double normal_cdf_reference(double x) {
  const double z = x / std::sqrt(2.0);
  const double az = std::fabs(z);
  double erf_az;
  if (az < 3.0) {
    // erf(z) = 2/sqrt(pi) * sum_n (-1)^n z^{2n+1} / (n! (2n+1))
    double term = az, sum = az;
    for (int n = 1; n < 200; ++n) {
      term *= -az * az / n;
      sum += term / (2 * n + 1);
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    erf_az = 2.0 / std::sqrt(M_PI) * sum;
  } else {
    // sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    double f = az;
    for (int k = 60; k >= 1; --k) f = az + (k / 2.0) / f;
    const double erfc_az = std::exp(-az * az) / (std::sqrt(M_PI) * f);
    erf_az = 1.0 - erfc_az;
  }
  const double erf_z = z >= 0 ? erf_az : -erf_az;
  return 0.5 * (1.0 + erf_z);
}

// Composite Simpson; brute-force reference integrator for smooth integrands.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 2000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Exact exponential-affine transform F(q) = E[exp(-q lambda_dt - int_0^dt lambda)]
// for the square-root intensity, via the hyperbolic closed form of the scalar
// Riccati equation. Independent of the library's bond-factor code path.
inline double cir_affine_transform(double q, double dt,
                                   const cvawwr::model::CirParams& cir) {
  const double g = cir.gamma, e2 = cir.eta * cir.eta;
  const double gbar = std::sqrt(g * g + 2.0 * e2);
  const double mp = 0.5 * (-g + gbar), mm = 0.5 * (-g - gbar);
  const double A = (q * e2 / 2.0 - mm) / gbar;
  const double B = (mp - q * e2 / 2.0) / gbar;
  const double u = A * std::exp(mp * dt) + B * std::exp(mm * dt);
  const double up = A * mp * std::exp(mp * dt) + B * mm * std::exp(mm * dt);
  const double b_end = (2.0 / e2) * (up / u);
  const double log_a = (2.0 * g * cir.theta / e2) * std::log(u);  // u(0) = 1
  return std::exp(-log_a - b_end * cir.lambda0);
}

// E[sqrt(lambda_dt) exp(-b lambda_dt - int_0^dt lambda)] via the identity
// sqrt(y) = 1/(2 sqrt(pi)) int_0^inf (1 - e^{-y u}) u^{-3/2} du applied to the
// affine transform above. Slow but entirely independent of the Bessel kernel.
inline double mixed_cir_reference(double b, double dt,
                                  const cvawwr::model::CirParams& cir) {
  const double fb = cir_affine_transform(b, dt, cir);
  auto g = [&](double s) {
    if (s <= 0.0) return 0.0;
    return 2.0 * (fb - cir_affine_transform(b + s * s, dt, cir)) / (s * s);
  };
  double val = simpson(g, 1e-9, 10.0, 40000);
  // log-spaced far range, then the exact-asymptotic tail F(q) ~ C q^{-w}
  auto glog = [&](double t) {
    const double s = std::exp(t);
    return g(s) * s;
  };
  val += simpson(glog, std::log(10.0), std::log(2000.0), 8000);
  const double w = 2.0 * cir.gamma * cir.theta / (cir.eta * cir.eta);
  const double smax = 2000.0;
  val += 2.0 * fb / smax - cir_affine_transform(b + smax * smax, dt, cir) / (smax * (0.5 + w));
  return val / (2.0 * std::sqrt(M_PI));
}

}  // namespace oracles
