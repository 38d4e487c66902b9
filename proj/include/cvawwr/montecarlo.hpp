#pragma once

#include <cstdint>
#include <vector>

#include "cvawwr/model.hpp"

namespace cvawwr::mc {

// Serial runs the batch loop on the calling thread; Parallel distributes
// batches over OpenMP workers. Streams are assigned per batch, and batch
// partial sums are reduced in batch order, so both modes produce bitwise
// identical estimates for any worker count.
enum class ExecMode { Serial, Parallel };

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci95_halfwidth = 0.0;  // 1.96 * std_error
  long long paths_used = 0;
};

struct PathSample {
  double x_T = 0.0;        // terminal log price
  double int_lambda = 0.0; // time integral of the (truncated) intensity
};

// Correlated (X, lambda) system on an equispaced grid: full-truncation Euler
// for the square-root intensity, exact lognormal stepping for X off the same
// Brownian increments. The integral uses the trapezoid of the truncated path.
std::vector<PathSample> simulate_paths(const model::ModelParams& params, double T,
                                       const model::McConfig& cfg,
                                       ExecMode mode = ExecMode::Parallel);

// CVA estimator (1-R) E[e^{-rT} (S_T - K)^+ (1 - e^{-int lambda})], optionally
// variance-reduced by the default-free call with exact Black-Scholes mean and
// regression-estimated coefficient.
McEstimate estimate_cva(const model::ModelParams& params, const model::Contract& contract,
                        double rho, const model::McConfig& cfg,
                        ExecMode mode = ExecMode::Parallel);

// Defaultable-price estimator E[e^{-rT} e^{-int lambda} (S_T - K)^+], same
// control machinery.
McEstimate estimate_price(const model::ModelParams& params, const model::Contract& contract,
                          double rho, const model::McConfig& cfg,
                          ExecMode mode = ExecMode::Parallel);

// Paths per RNG stream; exposed so tests can pin stream boundaries.
inline constexpr long long kBatchSize = 65536;

}  // namespace cvawwr::mc
