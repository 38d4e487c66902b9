#include "cvawwr/corr_expansion.hpp"

#include <chrono>
#include <cmath>

#include "cvawwr/spline.hpp"

namespace cvawwr::correxp {

using model::Contract;
using model::CvaResult;
using model::Method;
using model::ModelParams;
using model::NumericsConfig;

double equity_factor(double x, double t, double alpha, double T, double sigma,
                     double r, double strike, const num::QuadratureSpec& quad,
                     double gauss_width) {
  if (!(t < alpha && alpha < T))
    throw std::domain_error("equity_factor: requires t < alpha < T");
  const double kappa = std::log(strike);
  const double dt = alpha - t;
  const double sd = sigma * std::sqrt(dt);

  auto n_d1 = [&](double y) {
    const double tau = T - alpha;
    return num::normal_cdf((y - kappa + (r + 0.5 * sigma * sigma) * tau) /
                           (sigma * std::sqrt(tau)));
  };
  if (sd < 1e-8) return std::exp(x) * n_d1(x);  // degenerate Gaussian

  const double mean = x + (r - 0.5 * sigma * sigma) * dt;
  auto integrand = [&](double y) {
    const double w = (y - mean) / sd;
    return std::exp(y) * n_d1(y) * num::normal_pdf(w) / sd;
  };
  // e^y shifts the effective mode one stddev up; center the window there.
  const double lo = mean - gauss_width * sd;
  const double hi = mean + (gauss_width + 1.0) * sd;
  return num::integrate_adaptive(integrand, lo, hi, quad, {mean, mean + sd * sd});
}

G1Breakdown g1(double x, double lambda0, double t, double T,
               const ModelParams& params, const Contract& contract,
               const NumericsConfig& numerics) {
  if (!(t < T)) throw std::domain_error("g1: requires t < T");
  const double sigma = params.equity.sigma;
  const double r = params.rate.r;
  const double eta = params.cir.eta;

  auto integrand = [&](double alpha) -> double {
    if (alpha >= T) return 0.0;  // b2(0) = 0 kills the integrand
    const analytic::CirBondFactors f = analytic::cir_bond_factors(T - alpha, params.cir);
    const double gamma_factor =
        eta * sigma * std::exp(-r * (alpha - t)) * f.b2 * std::exp(-f.b1);
    double e1, e2;
    if (alpha - t <= 1e-9) {  // analytic limits at the left endpoint
      e1 = std::sqrt(lambda0) * std::exp(-f.b2 * lambda0);
      e2 = std::exp(x) * num::normal_cdf(
               (x - std::log(contract.strike) + (r + 0.5 * sigma * sigma) * (T - t)) /
               (sigma * std::sqrt(T - t)));
    } else {
      e1 = analytic::mixed_cir_expectation(f.b2, lambda0, t, alpha, params.cir,
                                           numerics.series, numerics.quad);
      e2 = equity_factor(x, t, alpha, T, sigma, r, contract.strike, numerics.quad,
                         numerics.gauss_width);
    }
    return gamma_factor * e1 * e2;
  };

  G1Breakdown out;
  const int n = numerics.time_grid;
  out.alpha_grid.resize(n);
  out.integrand_values.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    out.alpha_grid[i] = t + (T - t) * static_cast<double>(i) / (n - 1);

  // Exceptions may not unwind out of the parallel region; capture the first
  // one and rethrow after the join.
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out.integrand_values[i] = integrand(out.alpha_grid[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (numerics.g1_mode == model::G1Mode::Grid) {
    // Gridded pipeline: interpolate the sampled integrand, then integrate the
    // interpolant with the same adaptive rule.
    num::CubicSpline s(out.alpha_grid, out.integrand_values);
    out.g1 = -num::integrate_adaptive([&](double a) { return s(a); }, t, T,
                                      numerics.quad);
  } else {
    // Quadrature tolerances are meant for the CVA scale; the eta*sigma
    // prefactor shrinks the integrand, so tolerances need no rescaling.
    out.g1 = -num::integrate_adaptive(integrand, t, T, numerics.quad);
  }
  return out;
}

double price_first_order(double g0_value, double g1_value, double rho) {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw std::domain_error("price_first_order: |rho| must be <= 1");
  return g0_value + rho * g1_value;
}

Expansion::Expansion(const ModelParams& params, const Contract& contract,
                     const NumericsConfig& numerics)
    : contract_(contract) {
  const double x = std::log(params.equity.s0);
  bs_ = analytic::bs_call(x, 0.0, contract.maturity, params.equity.sigma,
                          params.rate.r, contract.strike);
  survival_T_ = analytic::survival(contract.maturity, params.cir);
  g0_ = survival_T_ * bs_;
  breakdown_ = g1(x, params.cir.lambda0, 0.0, contract.maturity, params, contract,
                  numerics);
}

double Expansion::price(double rho) const {
  return price_first_order(g0_, breakdown_.g1, rho);
}

double Expansion::cva(double rho) const {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw std::domain_error("cva: |rho| must be <= 1");
  return (1.0 - contract_.recovery) *
         (bs_ * (1.0 - survival_T_) - breakdown_.g1 * rho);
}

CvaResult cva(const ModelParams& params, const Contract& contract, double rho,
              const NumericsConfig& numerics) {
  const auto t0 = std::chrono::steady_clock::now();
  Expansion exp(params, contract, numerics);
  const double v = exp.cva(rho);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {Method::CorrExp, v, std::nullopt, dt.count()};
}

std::vector<CvaResult> cva_sweep(const ModelParams& params, const Contract& contract,
                                 const std::vector<double>& rhos,
                                 const NumericsConfig& numerics) {
  const auto t0 = std::chrono::steady_clock::now();
  Expansion exp(params, contract, numerics);
  const std::chrono::duration<double> setup = std::chrono::steady_clock::now() - t0;

  std::vector<CvaResult> out;
  out.reserve(rhos.size());
  for (double rho : rhos) {
    const auto t1 = std::chrono::steady_clock::now();
    const double v = exp.cva(rho);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t1;
    // The coefficient pair is shared by the whole sweep; attribute its cost
    // to the first row so per-row runtimes sum to the sweep total.
    out.push_back({Method::CorrExp, v, std::nullopt,
                   dt.count() + (out.empty() ? setup.count() : 0.0)});
  }
  return out;
}

}  // namespace cvawwr::correxp
