#pragma once

#include <vector>

#include "cvawwr/analytic.hpp"
#include "cvawwr/model.hpp"

namespace cvawwr::volexp {

// Double time integral of the mean-reversion decay kernel against the root of
// the frozen intensity path:
//   OuterU: int_t^T sqrt(lambda(u)) [ int_u^T e^{-gamma (s-u)} ds ] du
//   OuterS: int_t^T [ int_s^T e^{-gamma (s-u)} sqrt(lambda(u)) du ] ds
// The inner integral of OuterU is closed-form; OuterS keeps the literal limit
// order, which flips the triangle and grows the kernel.
double lambda_capital(double lambda0, double t, double T, const model::CirParams& cir,
                      const num::QuadratureSpec& quad,
                      model::LambdaNesting nesting = model::LambdaNesting::OuterU);

struct VolExpTerms {
  double det_survival = 0.0;  // e^{-int_t^T lambda(s) ds}, frozen path
  double bs = 0.0;            // Black-Scholes price
  double correction = 0.0;    // first-order coefficient multiplying rho
  double lambda_cap = 0.0;
};

VolExpTerms terms(double x, double lambda0, double t, double T,
                  const model::ModelParams& params, const model::Contract& contract,
                  const model::NumericsConfig& numerics);

// First-order-in-eta vulnerable call price. Linear in rho; at rho = 0 it is
// det_survival * bs regardless of the coefficient form.
double price(double x, double lambda0, double t, double T, double rho,
             const model::ModelParams& params, const model::Contract& contract,
             const model::NumericsConfig& numerics);

model::CvaResult cva(const model::ModelParams& params, const model::Contract& contract,
                     double rho, const model::NumericsConfig& numerics);

std::vector<model::CvaResult> cva_sweep(const model::ModelParams& params,
                                        const model::Contract& contract,
                                        const std::vector<double>& rhos,
                                        const model::NumericsConfig& numerics);

}  // namespace cvawwr::volexp
