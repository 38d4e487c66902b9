#pragma once

#include <vector>

#include "cvawwr/analytic.hpp"
#include "cvawwr/model.hpp"

namespace cvawwr::correxp {

// E[e^{X_alpha} N(d1(X_alpha, T - alpha))] under the lognormal law of X_alpha;
// the marginal Gaussian integral of the first-order coefficient's equity side.
// At r = 0 this is alpha-independent: e^x N(d1(x, T - t)).
double equity_factor(double x, double t, double alpha, double T, double sigma,
                     double r, double strike, const num::QuadratureSpec& quad,
                     double gauss_width = 12.0);

struct G1Breakdown {
  double g1 = 0.0;                       // signed; <= 0 for positive parameters
  std::vector<double> alpha_grid;        // diagnostic time grid over [t, T]
  std::vector<double> integrand_values;  // nonnegative integrand on that grid
};

// First-order correlation coefficient
//   g1 = -int_t^T Gamma(t,a,T) * E1(a) * E2(a) da,
// Gamma = eta sigma e^{-r(a-t)} b2(T-a) e^{-b1(T-a)}, E1 the mixed CIR
// transform, E2 the equity factor. Adaptive GK over [t, T] by default; the
// gridded mode evaluates on an equispaced grid (in parallel), interpolates
// with a cubic spline and integrates the interpolant.
G1Breakdown g1(double x, double lambda0, double t, double T,
               const model::ModelParams& params, const model::Contract& contract,
               const model::NumericsConfig& numerics);

// First-order price g0 + rho * g1 for a precomputed coefficient pair.
double price_first_order(double g0_value, double g1_value, double rho);

// Precomputes g0, g1 and the independence CVA once; prices any correlation at
// no further cost.
class Expansion {
 public:
  Expansion(const model::ModelParams& params, const model::Contract& contract,
            const model::NumericsConfig& numerics);

  double g0_value() const { return g0_; }
  double g1_value() const { return breakdown_.g1; }
  const G1Breakdown& breakdown() const { return breakdown_; }

  double price(double rho) const;       // vulnerable call price
  double cva(double rho) const;         // (1-R) * (c_BS (1 - G(T)) - rho g1)

 private:
  model::Contract contract_;
  double g0_ = 0.0;
  double bs_ = 0.0;
  double survival_T_ = 0.0;
  G1Breakdown breakdown_;
};

model::CvaResult cva(const model::ModelParams& params, const model::Contract& contract,
                     double rho, const model::NumericsConfig& numerics);

std::vector<model::CvaResult> cva_sweep(const model::ModelParams& params,
                                        const model::Contract& contract,
                                        const std::vector<double>& rhos,
                                        const model::NumericsConfig& numerics);

}  // namespace cvawwr::correxp
