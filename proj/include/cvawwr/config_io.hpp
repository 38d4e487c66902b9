#pragma once

#include <stdexcept>
#include <string>

#include "cvawwr/model.hpp"

namespace cvawwr {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One run's full configuration: model + contract + numerics + MC settings.
// Serialized as sectioned key/value text:
//
//   [equity]      s0, sigma
//   [rate]        r
//   [cir]         lambda0, gamma, theta, eta
//   [contract]    strike, maturity, recovery
//   [correlation] rho
//   [numerics]    abs_tol, rel_tol, max_subdivisions, max_order, tail_tol,
//                 gauss_width, time_grid, g1_mode, lambda_nesting, vol_exp_form
//   [mc]          paths, steps, seed, control_variate, antithetic
//
// Missing keys keep their defaults; unknown keys are rejected.
struct RunConfig {
  model::ModelParams params;
  model::Contract contract;
  model::NumericsConfig numerics;
  model::McConfig mc;
};

RunConfig parse_ini(const std::string& text);
std::string to_ini(const RunConfig& cfg);

RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path);

}  // namespace cvawwr
