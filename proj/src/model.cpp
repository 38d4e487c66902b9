#include "cvawwr/model.hpp"

#include <cmath>

namespace cvawwr::model {

std::string method_name(Method m) {
  switch (m) {
    case Method::CorrExp: return "corr-exp";
    case Method::DriftAdj: return "drift-adj";
    case Method::VolExp: return "vol-exp";
    case Method::MonteCarlo: return "mc";
    case Method::Independence: return "independence";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "corr-exp") return Method::CorrExp;
  if (name == "drift-adj") return Method::DriftAdj;
  if (name == "vol-exp") return Method::VolExp;
  if (name == "mc") return Method::MonteCarlo;
  if (name == "independence") return Method::Independence;
  return std::nullopt;
}

Validation validate(const ModelParams& params, const Contract& contract) {
  Validation v;
  auto err = [&v](const std::string& m) { v.errors.push_back(m); };

  if (!(params.equity.s0 > 0.0)) err("s0 must be positive");
  if (!(params.equity.sigma > 0.0)) err("sigma must be positive");
  if (!std::isfinite(params.rate.r)) err("r must be finite");
  if (!(params.cir.lambda0 > 0.0)) err("lambda0 must be positive");
  if (!(params.cir.gamma >= 0.0)) err("gamma must be nonnegative");
  if (!(params.cir.theta > 0.0)) err("theta must be positive");
  if (!(params.cir.eta > 0.0)) err("eta must be positive");
  if (!(contract.strike > 0.0)) err("strike must be positive");
  if (!(contract.maturity > 0.0)) err("maturity must be positive");
  if (!(contract.recovery >= 0.0 && contract.recovery < 1.0))
    err("recovery must lie in [0, 1)");
  if (!(params.corr.rho >= -1.0 && params.corr.rho <= 1.0))
    err("rho must lie in [-1, 1]");

  v.feller_satisfied = params.cir.feller_satisfied();
  if (v.errors.empty() && !v.feller_satisfied)
    v.warnings.push_back("Feller condition violated (2*gamma*theta <= eta^2): "
                         "the intensity can touch zero");
  return v;
}

Validation validate_numerics(const NumericsConfig& n) {
  Validation v;
  auto err = [&v](const std::string& m) { v.errors.push_back(m); };
  if (!(n.quad.abs_tol > 0.0)) err("abs_tol must be positive");
  if (!(n.quad.rel_tol > 0.0)) err("rel_tol must be positive");
  if (n.quad.max_subdivisions < 1) err("max_subdivisions must be >= 1");
  if (n.series.max_order < 1) err("max_order must be >= 1");
  if (!(n.series.tail_tol > 0.0)) err("tail_tol must be positive");
  if (!(n.gauss_width > 0.0)) err("gauss_width must be positive");
  if (n.time_grid < 5) err("time_grid must be >= 5");
  return v;
}

Validation validate_mc(const McConfig& mc) {
  Validation v;
  if (mc.paths < 1) v.errors.push_back("paths must be >= 1");
  if (mc.steps < 1) v.errors.push_back("steps must be >= 1");
  return v;
}

}  // namespace cvawwr::model
