#include "cvawwr/drift_adjustment.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace cvawwr::driftadj {

using model::CirParams;
using model::Contract;
using model::CvaResult;
using model::Method;
using model::ModelParams;
using model::NumericsConfig;

double theta_drift(double u, double s, double lambda_proxy, double rho,
                   const CirParams& cir) {
  if (u > s) throw std::domain_error("theta_drift: requires u <= s");
  if (!(lambda_proxy > 0.0))
    throw std::domain_error("theta_drift: proxy intensity must be positive");
  const double tau = s - u;
  const double b2 = analytic::cir_bond_factors(tau, cir).b2;
  const double b2d = 1.0 - cir.gamma * b2 - 0.5 * cir.eta * cir.eta * b2 * b2;
  const double b1d = cir.gamma * cir.theta * b2;
  const double den = b2d * lambda_proxy + b1d;
  if (std::fabs(den) < 1e-14)
    throw std::runtime_error("theta_drift: degenerate denominator at tau=" +
                             std::to_string(tau) + ", lambda=" +
                             std::to_string(lambda_proxy));
  return rho * cir.eta * std::sqrt(lambda_proxy) * (b2d / den - b2);
}

double big_theta(double t, double rho, const CirParams& cir,
                 const num::QuadratureSpec& quad, ProxyChoice /*proxy*/) {
  if (t < 0.0) throw std::domain_error("big_theta: t must be >= 0");
  if (t == 0.0 || rho == 0.0) return 0.0;
  auto integrand = [&](double u) {
    return theta_drift(u, t, analytic::mean_path(u, cir), rho, cir);
  };
  return num::integrate_adaptive(integrand, 0.0, t, quad);
}

double epe_closed_form(double t, const ModelParams& params, const Contract& contract,
                       double theta_big) {
  const double T = contract.maturity;
  if (!(t >= 0.0 && t < T)) throw std::domain_error("epe_closed_form: requires 0 <= t < T");
  const double sigma = params.equity.sigma;
  const double r = params.rate.r;
  const double x0 = std::log(params.equity.s0);
  const double kappa = std::log(contract.strike);
  // Arguments written over sqrt(T) directly; algebraically identical to the
  // alpha/beta form and stable as t -> T.
  const double shift = x0 - kappa + sigma * theta_big;
  const double sd = sigma * std::sqrt(T);
  const double d_up = (shift + (r + 0.5 * sigma * sigma) * T) / sd;
  const double d_dn = (shift + (r - 0.5 * sigma * sigma) * T) / sd;
  return std::exp(x0 + sigma * theta_big) * num::normal_cdf(d_up) -
         std::exp(kappa - r * T) * num::normal_cdf(d_dn);
}

CvaResult cva(const ModelParams& params, const Contract& contract, double rho,
              const NumericsConfig& numerics) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw std::domain_error("cva: |rho| must be <= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const double T = contract.maturity;

  // The inner Theta quadrature runs two orders tighter than the outer one so
  // its residual error does not masquerade as outer-integrand roughness.
  num::QuadratureSpec inner = numerics.quad;
  inner.abs_tol *= 1e-2;
  inner.rel_tol *= 1e-2;

  auto integrand = [&](double t) -> double {
    // Endpoint limits: EPE(0) = c_BS(0,T), EPE(T-) finite; the density
    // -G'(t) is continuous, so clamp to one-sided values.
    const double tt = std::min(std::max(t, 0.0), T * (1.0 - 1e-12));
    return epe_closed_form(tt, params, contract,
                           big_theta(tt, rho, params.cir, inner)) *
           analytic::survival_density(tt, params.cir);
  };
  const double v = (1.0 - contract.recovery) *
                   num::integrate_adaptive(integrand, 0.0, T, numerics.quad);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {Method::DriftAdj, v, std::nullopt, dt.count()};
}

std::vector<CvaResult> cva_sweep(const ModelParams& params, const Contract& contract,
                                 const std::vector<double>& rhos,
                                 const NumericsConfig& numerics) {
  // No cross-rho sharing: the measure change depends on rho, so each value
  // repeats the full double quadrature.
  std::vector<CvaResult> out;
  out.reserve(rhos.size());
  for (double rho : rhos) out.push_back(cva(params, contract, rho, numerics));
  return out;
}

}  // namespace cvawwr::driftadj
