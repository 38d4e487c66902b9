#include "cvawwr/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "cvawwr/analytic.hpp"
#include "cvawwr/rng.hpp"

namespace cvawwr::mc {

using model::Contract;
using model::McConfig;
using model::ModelParams;

namespace {

struct StepParams {
  double dt, sqdt;
  double x_drift;       // (r - sigma^2/2) dt
  double sigma_sq_dt;   // sigma * sqrt(dt)
  double rho, rho_bar;  // correlation split of the X driver
  double gamma, theta, eta;
};

StepParams make_step_params(const ModelParams& p, double rho, double T, int steps) {
  StepParams s{};
  s.dt = T / steps;
  s.sqdt = std::sqrt(s.dt);
  s.x_drift = (p.rate.r - 0.5 * p.equity.sigma * p.equity.sigma) * s.dt;
  s.sigma_sq_dt = p.equity.sigma * s.sqdt;
  s.rho = rho;
  s.rho_bar = std::sqrt(1.0 - rho * rho);
  s.gamma = p.cir.gamma;
  s.theta = p.cir.theta;
  s.eta = p.cir.eta;
  return s;
}

inline PathSample one_path(const StepParams& s, double x0, double lambda0,
                           int steps, num::NormalStream& rng, double sign = 1.0) {
  double x = x0;
  double lam = lambda0;
  double lam_pos = std::max(lam, 0.0);
  double int_lam = 0.0;
  for (int i = 0; i < steps; ++i) {
    double z1, z2;
    rng.next_pair(z1, z2);
    z1 *= sign;
    z2 *= sign;
    const double lam_next =
        lam + s.gamma * (s.theta - lam_pos) * s.dt + s.eta * std::sqrt(lam_pos) * s.sqdt * z1;
    const double lam_next_pos = std::max(lam_next, 0.0);
    int_lam += 0.5 * (lam_pos + lam_next_pos) * s.dt;
    x += s.x_drift + s.sigma_sq_dt * (s.rho * z1 + s.rho_bar * z2);
    lam = lam_next;
    lam_pos = lam_next_pos;
  }
  return {x, int_lam};
}

struct BatchSums {
  double y = 0.0, yy = 0.0, c = 0.0, cc = 0.0, yc = 0.0;
};

enum class Payoff { DefaultablePrice, Cva };

// One batch of paths: accumulates target payoff Y and control payoff C
// (discounted default-free call). Sequential within the batch.
BatchSums run_batch(const ModelParams& params, const Contract& contract, double rho,
                    const McConfig& cfg, long long batch, long long count,
                    Payoff payoff) {
  const double T = contract.maturity;
  const StepParams sp = make_step_params(params, rho, T, cfg.steps);
  const double x0 = std::log(params.equity.s0);
  const double disc = std::exp(-params.rate.r * T);
  const double lgd = 1.0 - contract.recovery;
  num::NormalStream rng(cfg.seed, static_cast<std::uint64_t>(batch));

  BatchSums sums;
  for (long long i = 0; i < count; ++i) {
    double y, c;
    auto evaluate = [&](const PathSample& ps, double& yo, double& co) {
      const double call = disc * std::max(std::exp(ps.x_T) - contract.strike, 0.0);
      co = call;
      yo = (payoff == Payoff::Cva)
               ? lgd * call * (-std::expm1(-ps.int_lambda))
               : call * std::exp(-ps.int_lambda);
    };
    if (cfg.antithetic) {
      // Mirror every increment of the path and average the pair.
      num::NormalStream mirror = rng;  // copy: replays identical draws negated
      const PathSample a = one_path(sp, x0, params.cir.lambda0, cfg.steps, rng);
      const PathSample b = one_path(sp, x0, params.cir.lambda0, cfg.steps, mirror, -1.0);
      double ya, ca, yb, cb;
      evaluate(a, ya, ca);
      evaluate(b, yb, cb);
      y = 0.5 * (ya + yb);
      c = 0.5 * (ca + cb);
    } else {
      const PathSample ps = one_path(sp, x0, params.cir.lambda0, cfg.steps, rng);
      evaluate(ps, y, c);
    }
    sums.y += y;
    sums.yy += y * y;
    sums.c += c;
    sums.cc += c * c;
    sums.yc += y * c;
  }
  return sums;
}

McEstimate reduce(const std::vector<BatchSums>& batches, long long n,
                  bool control_variate, double control_mean) {
  BatchSums t;
  for (const BatchSums& b : batches) {  // fixed batch order
    t.y += b.y;
    t.yy += b.yy;
    t.c += b.c;
    t.cc += b.cc;
    t.yc += b.yc;
  }
  const double nn = static_cast<double>(n);
  const double mean_y = t.y / nn;
  const double var_y = std::max(0.0, (t.yy - nn * mean_y * mean_y) / (nn - 1.0));

  McEstimate est;
  est.paths_used = n;
  if (!control_variate) {
    est.value = mean_y;
    est.std_error = std::sqrt(var_y / nn);
  } else {
    const double mean_c = t.c / nn;
    const double var_c = std::max(0.0, (t.cc - nn * mean_c * mean_c) / (nn - 1.0));
    const double cov = (t.yc - nn * mean_y * mean_c) / (nn - 1.0);
    const double beta = var_c > 0.0 ? cov / var_c : 0.0;
    est.value = mean_y - beta * (mean_c - control_mean);
    const double var_res = std::max(0.0, var_y - (var_c > 0.0 ? cov * cov / var_c : 0.0));
    est.std_error = std::sqrt(var_res / nn);
  }
  est.ci95_halfwidth = 1.959963984540054 * est.std_error;
  return est;
}

McEstimate estimate(const ModelParams& params, const Contract& contract, double rho,
                    const McConfig& cfg, ExecMode mode, Payoff payoff) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw std::domain_error("mc: |rho| must be <= 1");
  auto mv = model::validate_mc(cfg);
  if (!mv.ok()) throw std::invalid_argument("mc: " + mv.errors.front());

  const long long n = cfg.paths;
  const long long nbatch = (n + kBatchSize - 1) / kBatchSize;
  std::vector<BatchSums> batches(static_cast<std::size_t>(nbatch));

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < nbatch; ++b) {
      const long long count = std::min(kBatchSize, n - b * kBatchSize);
      batches[static_cast<std::size_t>(b)] =
          run_batch(params, contract, rho, cfg, b, count, payoff);
    }
  } else {
    for (long long b = 0; b < nbatch; ++b) {
      const long long count = std::min(kBatchSize, n - b * kBatchSize);
      batches[static_cast<std::size_t>(b)] =
          run_batch(params, contract, rho, cfg, b, count, payoff);
    }
  }

  const double control_mean =
      analytic::bs_call(std::log(params.equity.s0), 0.0, contract.maturity,
                        params.equity.sigma, params.rate.r, contract.strike);
  return reduce(batches, n, cfg.control_variate, control_mean);
}

}  // namespace

std::vector<PathSample> simulate_paths(const ModelParams& params, double T,
                                       const McConfig& cfg, ExecMode mode) {
  auto mv = model::validate_mc(cfg);
  if (!mv.ok()) throw std::invalid_argument("mc: " + mv.errors.front());
  const long long n = cfg.paths;
  const long long nbatch = (n + kBatchSize - 1) / kBatchSize;
  std::vector<PathSample> out(static_cast<std::size_t>(n));
  const StepParams sp = make_step_params(params, params.corr.rho, T, cfg.steps);
  const double x0 = std::log(params.equity.s0);

  auto do_batch = [&](long long b) {
    const long long count = std::min(kBatchSize, n - b * kBatchSize);
    num::NormalStream rng(cfg.seed, static_cast<std::uint64_t>(b));
    for (long long i = 0; i < count; ++i)
      out[static_cast<std::size_t>(b * kBatchSize + i)] =
          one_path(sp, x0, params.cir.lambda0, cfg.steps, rng);
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < nbatch; ++b) do_batch(b);
  } else {
    for (long long b = 0; b < nbatch; ++b) do_batch(b);
  }
  return out;
}

McEstimate estimate_cva(const ModelParams& params, const Contract& contract, double rho,
                        const McConfig& cfg, ExecMode mode) {
  return estimate(params, contract, rho, cfg, mode, Payoff::Cva);
}

McEstimate estimate_price(const ModelParams& params, const Contract& contract, double rho,
                          const McConfig& cfg, ExecMode mode) {
  return estimate(params, contract, rho, cfg, mode, Payoff::DefaultablePrice);
}

}  // namespace cvawwr::mc
