#include "cvawwr/vol_expansion.hpp"

#include <chrono>
#include <cmath>

namespace cvawwr::volexp {

using model::CirParams;
using model::Contract;
using model::CvaResult;
using model::LambdaNesting;
using model::Method;
using model::ModelParams;
using model::NumericsConfig;
using model::VolExpForm;

namespace {

double frozen_path(double lambda0, double dt, const CirParams& cir) {
  return lambda0 * std::exp(-cir.gamma * dt) + cir.theta * (-std::expm1(-cir.gamma * dt));
}

}  // namespace

double lambda_capital(double lambda0, double t, double T, const CirParams& cir,
                      const num::QuadratureSpec& quad, LambdaNesting nesting) {
  if (!(t < T)) throw std::domain_error("lambda_capital: requires t < T");
  const double g = cir.gamma;
  if (nesting == LambdaNesting::OuterU) {
    auto kernel = [&](double u) {
      const double decay = (g == 0.0) ? (T - u) : (-std::expm1(-g * (T - u)) / g);
      return std::sqrt(frozen_path(lambda0, u - t, cir)) * decay;
    };
    return num::integrate_adaptive(kernel, t, T, quad);
  }
  // Literal limit order: inner u from s to T with the kernel growing in u.
  auto outer = [&](double s) {
    auto inner = [&](double u) {
      return std::exp(-g * (s - u)) * std::sqrt(frozen_path(lambda0, u - t, cir));
    };
    return num::integrate_adaptive(inner, s, T, quad);
  };
  return num::integrate_adaptive(outer, t, T, quad);
}

VolExpTerms terms(double x, double lambda0, double t, double T,
                  const ModelParams& params, const Contract& contract,
                  const NumericsConfig& numerics) {
  const double sigma = params.equity.sigma;
  const double r = params.rate.r;
  const double eta = params.cir.eta;
  const double kappa = std::log(contract.strike);
  CirParams cir = params.cir;
  cir.lambda0 = lambda0;

  VolExpTerms out;
  out.det_survival = std::exp(-analytic::mean_path_integral(0.0, T - t, cir));
  out.bs = analytic::bs_call(x, t, T, sigma, r, contract.strike);
  out.lambda_cap = lambda_capital(lambda0, t, T, cir, numerics.quad, numerics.nesting);

  if (numerics.vol_exp_form == VolExpForm::Direct) {
    // sigma eta e^{x - sigma^2 (T-t)/2} N(d1) Lambda, discounted by survival
    // through the price assembly.
    const double tau = T - t;
    const double d1 = (x - kappa + (r + 0.5 * sigma * sigma) * tau) / (sigma * std::sqrt(tau));
    out.correction = sigma * eta * std::exp(x - 0.5 * sigma * sigma * tau) *
                     num::normal_cdf(d1) * out.lambda_cap;
  } else {
    // Benchmark form: spot prefactor, drift argument left unnormalized, and
    // the correction applied outside the survival discount.
    const double dtil = x - kappa + (r + 0.5 * sigma * sigma) * (T - t);
    out.correction = sigma * eta * std::exp(x) * num::normal_cdf(dtil) * out.lambda_cap;
  }
  return out;
}

double price(double x, double lambda0, double t, double T, double rho,
             const ModelParams& params, const Contract& contract,
             const NumericsConfig& numerics) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw std::domain_error("price: |rho| must be <= 1");
  const VolExpTerms tm = terms(x, lambda0, t, T, params, contract, numerics);
  if (numerics.vol_exp_form == VolExpForm::Direct)
    return tm.det_survival * (tm.bs - rho * tm.correction);
  return tm.det_survival * tm.bs - rho * tm.correction;
}

namespace {

double cva_from_terms(const VolExpTerms& tm, double rho, double recovery,
                      VolExpForm form) {
  const double corr = (form == VolExpForm::Direct) ? tm.det_survival * tm.correction
                                                   : tm.correction;
  return (1.0 - recovery) * (tm.bs * (1.0 - tm.det_survival) + rho * corr);
}

}  // namespace

CvaResult cva(const ModelParams& params, const Contract& contract, double rho,
              const NumericsConfig& numerics) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw std::domain_error("cva: |rho| must be <= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const VolExpTerms tm = terms(std::log(params.equity.s0), params.cir.lambda0, 0.0,
                               contract.maturity, params, contract, numerics);
  const double v = cva_from_terms(tm, rho, contract.recovery, numerics.vol_exp_form);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {Method::VolExp, v, std::nullopt, dt.count()};
}

std::vector<CvaResult> cva_sweep(const ModelParams& params, const Contract& contract,
                                 const std::vector<double>& rhos,
                                 const NumericsConfig& numerics) {
  const auto t0 = std::chrono::steady_clock::now();
  const VolExpTerms tm = terms(std::log(params.equity.s0), params.cir.lambda0, 0.0,
                               contract.maturity, params, contract, numerics);
  const std::chrono::duration<double> setup = std::chrono::steady_clock::now() - t0;

  std::vector<CvaResult> out;
  out.reserve(rhos.size());
  for (double rho : rhos) {
    const double v = cva_from_terms(tm, rho, contract.recovery, numerics.vol_exp_form);
    out.push_back({Method::VolExp, v, std::nullopt, out.empty() ? setup.count() : 0.0});
  }
  return out;
}

}  // namespace cvawwr::volexp
