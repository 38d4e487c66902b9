#include "cvawwr/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvawwr::analytic {

using model::CirParams;
using model::Contract;
using model::ModelParams;
using num::QuadratureSpec;
using num::SeriesSpec;

CirBondFactors cir_bond_factors(double tau, const CirParams& cir) {
  if (tau < 0.0) throw std::domain_error("cir_bond_factors: tau must be >= 0");
  const double gbar = std::sqrt(cir.gamma * cir.gamma + 2.0 * cir.eta * cir.eta);
  if (tau == 0.0) return {0.0, 0.0, gbar};
  const double e = std::expm1(gbar * tau);  // e^{gbar tau} - 1
  const double den = (cir.gamma + gbar) * e + 2.0 * gbar;
  const double b2 = 2.0 * e / den;
  // b1 = -(2 gamma theta / eta^2) * log(2 gbar e^{(gamma+gbar) tau / 2} / den)
  const double logA = std::log(2.0 * gbar) + 0.5 * (cir.gamma + gbar) * tau - std::log(den);
  const double b1 = -(2.0 * cir.gamma * cir.theta / (cir.eta * cir.eta)) * logA;
  return {b1, b2, gbar};
}

double b2_prime(double tau, const CirParams& cir) {
  const double b2 = cir_bond_factors(tau, cir).b2;
  return 1.0 - cir.gamma * b2 - 0.5 * cir.eta * cir.eta * b2 * b2;
}

double b1_prime(double tau, const CirParams& cir) {
  return cir.gamma * cir.theta * cir_bond_factors(tau, cir).b2;
}

double survival(double t, const CirParams& cir) {
  const CirBondFactors f = cir_bond_factors(t, cir);
  return std::exp(-f.b1 - f.b2 * cir.lambda0);
}

double survival_density(double t, const CirParams& cir) {
  return (b1_prime(t, cir) + b2_prime(t, cir) * cir.lambda0) * survival(t, cir);
}

double bs_call(double x, double t, double T, double sigma, double r, double strike) {
  if (!(t < T)) throw std::domain_error("bs_call: requires t < T");
  const double tau = T - t;
  const double kappa = std::log(strike);
  const double sd = sigma * std::sqrt(tau);
  const double d1 = (x - kappa + (r + 0.5 * sigma * sigma) * tau) / sd;
  const double d2 = d1 - sd;
  return std::exp(x) * num::normal_cdf(d1) -
         strike * std::exp(-r * tau) * num::normal_cdf(d2);
}

double g0(double x, double lambda0, double t, double T,
          const ModelParams& params, const Contract& contract) {
  CirParams cir = params.cir;
  cir.lambda0 = lambda0;
  const CirBondFactors f = cir_bond_factors(T - t, cir);
  return std::exp(-f.b1 - f.b2 * lambda0) *
         bs_call(x, t, T, params.equity.sigma, params.rate.r, contract.strike);
}

double independence_cva(const ModelParams& params, const Contract& contract) {
  const double c = bs_call(std::log(params.equity.s0), 0.0, contract.maturity,
                           params.equity.sigma, params.rate.r, contract.strike);
  return (1.0 - contract.recovery) * c * (1.0 - survival(contract.maturity, params.cir));
}

double mean_path(double t, const CirParams& cir) {
  if (t < 0.0) throw std::domain_error("mean_path: t must be >= 0");
  return cir.theta + (cir.lambda0 - cir.theta) * std::exp(-cir.gamma * t);
}

double mean_path_integral(double t0, double t1, const CirParams& cir) {
  if (t1 < t0) throw std::domain_error("mean_path_integral: t1 must be >= t0");
  const double dt = t1 - t0;
  if (cir.gamma == 0.0) return cir.lambda0 * dt;
  const double decay0 = std::exp(-cir.gamma * t0);
  const double decay1 = std::exp(-cir.gamma * t1);
  return cir.theta * dt + (cir.lambda0 - cir.theta) * (decay0 - decay1) / cir.gamma;
}

MgfKernelParams mgf_kernel_params(const CirParams& cir) {
  const double e2 = cir.eta * cir.eta;
  return {2.0 * cir.gamma * cir.theta / e2 - 1.0,
          std::sqrt(cir.gamma * cir.gamma + 2.0 * e2)};
}

namespace {

// log M_{t,alpha}(lambda, zeta): every factor of the density-weighted
// conditional MGF except the Bessel term.
double log_mgf_m(double lambda, double zeta, double dt, const CirParams& cir,
                 const MgfKernelParams& kp) {
  const double e2 = cir.eta * cir.eta;
  const double half = 0.5 * kp.gamma_bar * dt;
  const double coth = 1.0 / std::tanh(half);
  return std::log(2.0 * kp.gamma_bar / e2) +
         0.5 * kp.nu * (std::log(zeta) - std::log(lambda)) - half -
         (kp.gamma_bar * (lambda + zeta) * coth - cir.gamma * (lambda - zeta) -
          cir.theta * cir.gamma * cir.gamma * dt) / e2 -
         std::log(-std::expm1(-kp.gamma_bar * dt));
}

double bessel_argument(double lambda, double zeta, double dt, const CirParams& cir,
                       const MgfKernelParams& kp) {
  return 2.0 * kp.gamma_bar * std::sqrt(zeta * lambda) /
         (cir.eta * cir.eta * std::sinh(0.5 * kp.gamma_bar * dt));
}

// E[ w(lambda_alpha) exp(-b lambda_alpha - int_t^alpha lambda) ] where the
// weight contributes zeta^weight_power to the integrand's edge behavior.
double weighted_transform(double b, double lambda0, double t, double alpha,
                          const CirParams& cir, const SeriesSpec& series,
                          const QuadratureSpec& quad, double weight_power) {
  if (!(alpha > t)) throw std::domain_error("weighted transform: requires alpha > t");
  const double dt = alpha - t;
  const MgfKernelParams kp = mgf_kernel_params(cir);
  CirParams shifted = cir;  // mean of lambda_alpha sets the integration scale
  shifted.lambda0 = lambda0;
  const double scale = mean_path(dt, shifted);

  // Degenerate regime: for nu ~ 1/eta^2 this large, the kernel's log is a
  // difference of huge terms and double precision carries no signal, while
  // the frozen-path limit is already exact to O(eta^2).
  if (kp.nu >= 1e5)
    return std::pow(scale, weight_power) *
           std::exp(-b * scale - mean_path_integral(0.0, dt, shifted));

  auto integrand = [&](double zeta) {
    const double lk = log_mgf_m(lambda0, zeta, dt, cir, kp) +
                      num::log_bessel_i(kp.nu, bessel_argument(lambda0, zeta, dt, cir, kp), series) -
                      b * zeta + weight_power * std::log(zeta);
    return std::exp(lk);
  };
  // The terminal-state kernel concentrates around the mean with a width of
  // order eta sqrt(lambda dt); anchor that region for vanishing horizons.
  const double width = cir.eta * std::sqrt(std::max(lambda0, scale) * dt);
  std::vector<double> anchors;
  for (double k : {-10.0, -6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0, 10.0, 16.0}) {
    const double zeta = scale + k * width;
    if (zeta > 0.0) anchors.push_back(zeta);
  }
  // Integrand ~ zeta^{nu + weight_power} at the origin.
  return num::integrate_semi_infinite(integrand, scale, kp.nu + weight_power, quad,
                                      anchors);
}

}  // namespace

double log_mgf_kernel(double lambda0, double zeta, double t, double alpha,
                      const CirParams& cir, const SeriesSpec& series) {
  if (!(alpha > t)) throw std::domain_error("mgf_kernel: requires alpha > t");
  if (!(zeta > 0.0)) throw std::domain_error("mgf_kernel: requires zeta > 0");
  const double dt = alpha - t;
  const MgfKernelParams kp = mgf_kernel_params(cir);
  return log_mgf_m(lambda0, zeta, dt, cir, kp) +
         num::log_bessel_i(kp.nu, bessel_argument(lambda0, zeta, dt, cir, kp), series);
}

double mgf_kernel(double lambda0, double zeta, double t, double alpha,
                  const CirParams& cir) {
  const double lk = log_mgf_kernel(lambda0, zeta, t, alpha, cir, SeriesSpec{});
  if (lk > 709.0 || std::isnan(lk))
    throw std::overflow_error(
        "mgf_kernel: exponent " + std::to_string(lk) +
        " overflows at zeta=" + std::to_string(zeta) +
        ", alpha-t=" + std::to_string(alpha - t));
  return std::exp(lk);
}

double mixed_cir_expectation(double b, double lambda0, double t, double alpha,
                             const CirParams& cir, const SeriesSpec& series,
                             const QuadratureSpec& quad) {
  if (b < 0.0) throw std::domain_error("mixed_cir_expectation: b must be >= 0");
  const double dt = alpha - t;
  if (dt <= 1e-9)  // analytic limit of the collapsing kernel
    return std::sqrt(lambda0) * std::exp(-b * lambda0);
  return weighted_transform(b, lambda0, t, alpha, cir, series, quad, 0.5);
}

double cir_joint_transform(double b, double lambda0, double t, double alpha,
                           const CirParams& cir, const SeriesSpec& series,
                           const QuadratureSpec& quad) {
  const double dt = alpha - t;
  if (dt <= 1e-9) return std::exp(-b * lambda0);
  return weighted_transform(b, lambda0, t, alpha, cir, series, quad, 0.0);
}

}  // namespace cvawwr::analytic
