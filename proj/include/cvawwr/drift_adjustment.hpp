#pragma once

#include <vector>

#include "cvawwr/analytic.hpp"
#include "cvawwr/model.hpp"

namespace cvawwr::driftadj {

// Deterministic intensity proxy plugged into the measure-change drift.
// MeanPath freezes E[lambda_t]; a proxy under the horizon measure itself
// would need one further approximation layer and is left as an extension
// point of this enum.
enum class ProxyChoice { MeanPath };

// Instantaneous drift adjustment theta_u^s at running time u for the measure
// tied to horizon s:
//   rho eta sqrt(lambda) ( b2'(s-u) / (b2'(s-u) lambda + b1'(s-u)) - b2(s-u) ),
// with the bond-factor derivatives taken analytically.
double theta_drift(double u, double s, double lambda_proxy, double rho,
                   const model::CirParams& cir);

// Integrated adjustment Theta(t) = int_0^t theta_u^t(lambda(u)) du with the
// proxy path lambda(u) = E[lambda_u]. Linear in rho.
double big_theta(double t, double rho, const model::CirParams& cir,
                 const num::QuadratureSpec& quad,
                 ProxyChoice proxy = ProxyChoice::MeanPath);

// Discounted expected positive exposure under the horizon-t measure with the
// accumulated log-price shift sigma * theta_big. At theta_big = 0 this equals
// today's Black-Scholes price for every t (martingale property).
double epe_closed_form(double t, const model::ModelParams& params,
                       const model::Contract& contract, double theta_big);

// CVA(0,T) = (1-R) int_0^T EPE(t) (-G'(t)) dt.
model::CvaResult cva(const model::ModelParams& params, const model::Contract& contract,
                     double rho, const model::NumericsConfig& numerics);

std::vector<model::CvaResult> cva_sweep(const model::ModelParams& params,
                                        const model::Contract& contract,
                                        const std::vector<double>& rhos,
                                        const model::NumericsConfig& numerics);

}  // namespace cvawwr::driftadj
