#pragma once

#include "cvawwr/model.hpp"
#include "cvawwr/quadrature.hpp"
#include "cvawwr/special.hpp"

namespace cvawwr::analytic {

// Exponential-affine factors of the CIR transform
//   E[exp(-int_t^{t+tau} lambda_s ds)] = exp(-b1(tau) - b2(tau) * lambda_t).
// gamma_bar = sqrt(gamma^2 + 2 eta^2) is the Riccati discriminant root; the
// factors solve b2' = 1 - gamma b2 - eta^2 b2^2 / 2, b1' = gamma theta b2.
struct CirBondFactors {
  double b1 = 0.0;
  double b2 = 0.0;
  double gamma_bar = 0.0;
};

CirBondFactors cir_bond_factors(double tau, const model::CirParams& cir);

// Time derivatives, straight from the Riccati system (no finite differences).
double b2_prime(double tau, const model::CirParams& cir);
double b1_prime(double tau, const model::CirParams& cir);

// Survival function G(t) = E[exp(-int_0^t lambda)] and its density -G'(t).
double survival(double t, const model::CirParams& cir);
double survival_density(double t, const model::CirParams& cir);

// Black-Scholes call on the log price x at time t, maturity T.
double bs_call(double x, double t, double T, double sigma, double r, double strike);

// Zero-correlation (independence) defaultable call price:
// survival factor times the Black-Scholes price.
double g0(double x, double lambda0, double t, double T,
          const model::ModelParams& params, const model::Contract& contract);

// Independence CVA (1-R) * c_BS * (1 - G(T)) at time zero.
double independence_cva(const model::ModelParams& params, const model::Contract& contract);

// Mean intensity path E[lambda_t] and its closed-form time integral.
double mean_path(double t, const model::CirParams& cir);
double mean_path_integral(double t0, double t1, const model::CirParams& cir);

struct MgfKernelParams {
  double nu = 0.0;         // Bessel order 2 gamma theta / eta^2 - 1
  double gamma_bar = 0.0;  // sqrt(gamma^2 + 2 eta^2)
};

MgfKernelParams mgf_kernel_params(const model::CirParams& cir);

// Density-weighted conditional MGF of the integrated intensity:
//   mgf_kernel(lambda, zeta, t, alpha) = M_{t,alpha}(lambda, zeta) * I_nu(z)
// such that E[exp(-int_t^alpha lambda) | lambda_alpha = zeta] * f(zeta) equals
// the product (the transition density cancels and is never formed).
// Evaluated in the log domain, so the Bessel factor may exceed the double
// range internally; throws std::overflow_error only if the combined exponent
// does.
double mgf_kernel(double lambda0, double zeta, double t, double alpha,
                  const model::CirParams& cir);

// log of the above, for integrators that want to attach extra weights.
double log_mgf_kernel(double lambda0, double zeta, double t, double alpha,
                      const model::CirParams& cir, const num::SeriesSpec& series);

// E[sqrt(lambda_alpha) exp(-b lambda_alpha - int_t^alpha lambda)], the
// intensity-side factor of the first-order coefficient. The alpha -> t limit
// sqrt(lambda0) exp(-b lambda0) is returned for vanishing horizons.
double mixed_cir_expectation(double b, double lambda0, double t, double alpha,
                             const model::CirParams& cir,
                             const num::SeriesSpec& series,
                             const num::QuadratureSpec& quad);

// Same transform with unit weight instead of sqrt(lambda_alpha):
// E[exp(-b lambda_alpha - int_t^alpha lambda)]. Shares the kernel machinery;
// used for consistency checks against the exponential-affine closed form.
double cir_joint_transform(double b, double lambda0, double t, double alpha,
                           const model::CirParams& cir,
                           const num::SeriesSpec& series,
                           const num::QuadratureSpec& quad);

}  // namespace cvawwr::analytic
