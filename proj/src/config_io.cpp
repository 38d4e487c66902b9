#include "cvawwr/config_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cvawwr {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + ": not a number: '" + value + "'");
  }
}

long long parse_int(const std::string& section, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + ": not an integer: '" + value + "'");
  }
}

bool parse_bool(const std::string& section, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("[" + section + "] " + key + ": not a boolean: '" + value + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_ini(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    auto unknown = [&]() -> ConfigError {
      return ConfigError("unknown key [" + section + "] " + key);
    };

    if (section == "equity") {
      if (key == "s0") cfg.params.equity.s0 = parse_double(section, key, value);
      else if (key == "sigma") cfg.params.equity.sigma = parse_double(section, key, value);
      else throw unknown();
    } else if (section == "rate") {
      if (key == "r") cfg.params.rate.r = parse_double(section, key, value);
      else throw unknown();
    } else if (section == "cir") {
      if (key == "lambda0") cfg.params.cir.lambda0 = parse_double(section, key, value);
      else if (key == "gamma") cfg.params.cir.gamma = parse_double(section, key, value);
      else if (key == "theta") cfg.params.cir.theta = parse_double(section, key, value);
      else if (key == "eta") cfg.params.cir.eta = parse_double(section, key, value);
      else throw unknown();
    } else if (section == "contract") {
      if (key == "strike") cfg.contract.strike = parse_double(section, key, value);
      else if (key == "maturity") cfg.contract.maturity = parse_double(section, key, value);
      else if (key == "recovery") cfg.contract.recovery = parse_double(section, key, value);
      else throw unknown();
    } else if (section == "correlation") {
      if (key == "rho") cfg.params.corr.rho = parse_double(section, key, value);
      else throw unknown();
    } else if (section == "numerics") {
      if (key == "abs_tol") cfg.numerics.quad.abs_tol = parse_double(section, key, value);
      else if (key == "rel_tol") cfg.numerics.quad.rel_tol = parse_double(section, key, value);
      else if (key == "max_subdivisions") cfg.numerics.quad.max_subdivisions = static_cast<int>(parse_int(section, key, value));
      else if (key == "max_order") cfg.numerics.series.max_order = static_cast<int>(parse_int(section, key, value));
      else if (key == "tail_tol") cfg.numerics.series.tail_tol = parse_double(section, key, value);
      else if (key == "gauss_width") cfg.numerics.gauss_width = parse_double(section, key, value);
      else if (key == "time_grid") cfg.numerics.time_grid = static_cast<int>(parse_int(section, key, value));
      else if (key == "g1_mode") {
        if (value == "adaptive") cfg.numerics.g1_mode = model::G1Mode::Adaptive;
        else if (value == "grid") cfg.numerics.g1_mode = model::G1Mode::Grid;
        else throw ConfigError("[numerics] g1_mode: expected adaptive|grid");
      } else if (key == "lambda_nesting") {
        if (value == "outer_u") cfg.numerics.nesting = model::LambdaNesting::OuterU;
        else if (value == "outer_s") cfg.numerics.nesting = model::LambdaNesting::OuterS;
        else throw ConfigError("[numerics] lambda_nesting: expected outer_u|outer_s");
      } else if (key == "vol_exp_form") {
        if (value == "benchmark") cfg.numerics.vol_exp_form = model::VolExpForm::Benchmark;
        else if (value == "direct") cfg.numerics.vol_exp_form = model::VolExpForm::Direct;
        else throw ConfigError("[numerics] vol_exp_form: expected benchmark|direct");
      } else throw unknown();
    } else if (section == "mc") {
      if (key == "paths") cfg.mc.paths = parse_int(section, key, value);
      else if (key == "steps") cfg.mc.steps = static_cast<int>(parse_int(section, key, value));
      else if (key == "seed") cfg.mc.seed = static_cast<std::uint64_t>(parse_int(section, key, value));
      else if (key == "control_variate") cfg.mc.control_variate = parse_bool(section, key, value);
      else if (key == "antithetic") cfg.mc.antithetic = parse_bool(section, key, value);
      else throw unknown();
    } else {
      throw ConfigError("unknown section [" + section + "]");
    }
  }
  return cfg;
}

std::string to_ini(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[equity]\n"
      << "s0 = " << fmt(cfg.params.equity.s0) << "\n"
      << "sigma = " << fmt(cfg.params.equity.sigma) << "\n\n"
      << "[rate]\n"
      << "r = " << fmt(cfg.params.rate.r) << "\n\n"
      << "[cir]\n"
      << "lambda0 = " << fmt(cfg.params.cir.lambda0) << "\n"
      << "gamma = " << fmt(cfg.params.cir.gamma) << "\n"
      << "theta = " << fmt(cfg.params.cir.theta) << "\n"
      << "eta = " << fmt(cfg.params.cir.eta) << "\n\n"
      << "[contract]\n"
      << "strike = " << fmt(cfg.contract.strike) << "\n"
      << "maturity = " << fmt(cfg.contract.maturity) << "\n"
      << "recovery = " << fmt(cfg.contract.recovery) << "\n\n"
      << "[correlation]\n"
      << "rho = " << fmt(cfg.params.corr.rho) << "\n\n"
      << "[numerics]\n"
      << "abs_tol = " << fmt(cfg.numerics.quad.abs_tol) << "\n"
      << "rel_tol = " << fmt(cfg.numerics.quad.rel_tol) << "\n"
      << "max_subdivisions = " << cfg.numerics.quad.max_subdivisions << "\n"
      << "max_order = " << cfg.numerics.series.max_order << "\n"
      << "tail_tol = " << fmt(cfg.numerics.series.tail_tol) << "\n"
      << "gauss_width = " << fmt(cfg.numerics.gauss_width) << "\n"
      << "time_grid = " << cfg.numerics.time_grid << "\n"
      << "g1_mode = " << (cfg.numerics.g1_mode == model::G1Mode::Adaptive ? "adaptive" : "grid") << "\n"
      << "lambda_nesting = " << (cfg.numerics.nesting == model::LambdaNesting::OuterU ? "outer_u" : "outer_s") << "\n"
      << "vol_exp_form = " << (cfg.numerics.vol_exp_form == model::VolExpForm::Benchmark ? "benchmark" : "direct") << "\n\n"
      << "[mc]\n"
      << "paths = " << cfg.mc.paths << "\n"
      << "steps = " << cfg.mc.steps << "\n"
      << "seed = " << cfg.mc.seed << "\n"
      << "control_variate = " << (cfg.mc.control_variate ? "true" : "false") << "\n"
      << "antithetic = " << (cfg.mc.antithetic ? "true" : "false") << "\n";
  return out.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ini(buf.str());
}

void save_config(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path);
  out << to_ini(cfg);
}

}  // namespace cvawwr
