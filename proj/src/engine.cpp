#include "cvawwr/engine.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cvawwr/analytic.hpp"
#include "cvawwr/corr_expansion.hpp"
#include "cvawwr/drift_adjustment.hpp"
#include "cvawwr/montecarlo.hpp"
#include "cvawwr/vol_expansion.hpp"

namespace cvawwr::engine {

using model::CvaResult;
using model::Method;

namespace {

std::string num_field(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fixed5(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::vector<Cell> sweep_method(Method m, const RunSpec& spec) {
  const RunConfig& cfg = spec.config;
  const std::vector<double>& rhos = spec.rho_grid;
  std::vector<Cell> out(rhos.size());

  auto from_results = [&](const std::vector<CvaResult>& rs) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      out[i].present = true;
      out[i].value = rs[i].value;
      out[i].runtime_s = rs[i].runtime_s;
      if (rs[i].ci_halfwidth) {
        out[i].has_ci = true;
        out[i].ci = *rs[i].ci_halfwidth;
      }
    }
  };
  auto mark_all_failed = [&](const std::string& what) {
    for (Cell& c : out) {
      c.present = true;
      c.failed = true;
      c.error = what;
    }
  };

  try {
    switch (m) {
      case Method::CorrExp:
        from_results(correxp::cva_sweep(cfg.params, cfg.contract, rhos, cfg.numerics));
        break;
      case Method::VolExp:
        from_results(volexp::cva_sweep(cfg.params, cfg.contract, rhos, cfg.numerics));
        break;
      case Method::DriftAdj: {
        // Per-rho loop so one bad rho cannot take down the whole column.
        for (std::size_t i = 0; i < rhos.size(); ++i) {
          try {
            CvaResult r = driftadj::cva(cfg.params, cfg.contract, rhos[i], cfg.numerics);
            out[i] = {true, false, r.value, false, 0.0, r.runtime_s, ""};
          } catch (const std::exception& e) {
            out[i] = {true, true, 0.0, false, 0.0, 0.0, e.what()};
          }
        }
        break;
      }
      case Method::MonteCarlo: {
        for (std::size_t i = 0; i < rhos.size(); ++i) {
          try {
            const auto t0 = std::chrono::steady_clock::now();
            mc::McEstimate e = mc::estimate_cva(
                cfg.params, cfg.contract, rhos[i], cfg.mc,
                spec.mc_serial ? mc::ExecMode::Serial : mc::ExecMode::Parallel);
            const std::chrono::duration<double> dt =
                std::chrono::steady_clock::now() - t0;
            out[i] = {true, false, e.value, true, e.ci95_halfwidth, dt.count(), ""};
          } catch (const std::exception& e) {
            out[i] = {true, true, 0.0, false, 0.0, 0.0, e.what()};
          }
        }
        break;
      }
      case Method::Independence: {
        const auto t0 = std::chrono::steady_clock::now();
        const double v = analytic::independence_cva(cfg.params, cfg.contract);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        for (std::size_t i = 0; i < rhos.size(); ++i)
          out[i] = {true, false, v, false, 0.0, i == 0 ? dt.count() : 0.0, ""};
        break;
      }
    }
  } catch (const std::exception& e) {
    mark_all_failed(e.what());
  }
  return out;
}

}  // namespace

const Cell* TableArtifact::find(double rho, Method m) const {
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (rhos[i] != rho) continue;
    for (std::size_t j = 0; j < methods.size(); ++j)
      if (methods[j] == m) return &cells[i][j];
  }
  return nullptr;
}

TableArtifact run_table(const RunSpec& spec) {
  if (spec.rho_grid.empty())
    throw ConfigError("rho grid must be nonempty");
  for (double r : spec.rho_grid)
    if (!(r >= -1.0 && r <= 1.0))
      throw ConfigError("rho grid values must lie in [-1, 1]");
  auto v = model::validate(spec.config.params, spec.config.contract);
  if (!v.ok()) throw ConfigError("invalid model: " + v.errors.front());
  auto vn = model::validate_numerics(spec.config.numerics);
  if (!vn.ok()) throw ConfigError("invalid numerics: " + vn.errors.front());

  TableArtifact t;
  t.rhos = spec.rho_grid;
  t.methods = spec.methods;
  t.cells.assign(t.rhos.size(), std::vector<Cell>(t.methods.size()));

  for (std::size_t j = 0; j < t.methods.size(); ++j) {
    std::vector<Cell> col = sweep_method(t.methods[j], spec);
    for (std::size_t i = 0; i < t.rhos.size(); ++i) {
      t.cells[i][j] = col[i];
      t.any_failed = t.any_failed || col[i].failed;
      if (col[i].present && !col[i].failed && col[i].value < 0.0)
        t.warnings.push_back(model::method_name(t.methods[j]) + " cva " +
                             num_field(col[i].value) + " below zero at rho=" +
                             num_field(t.rhos[i]) +
                             " (first-order approximation crossing)");
    }
  }
  return t;
}

TableArtifact run_price_table(const RunSpec& spec) {
  TableArtifact t = run_table(spec);
  const double c_bs = analytic::bs_call(
      std::log(spec.config.params.equity.s0), 0.0, spec.config.contract.maturity,
      spec.config.params.equity.sigma, spec.config.params.rate.r,
      spec.config.contract.strike);
  for (auto& row : t.cells)
    for (Cell& c : row)
      if (c.present && !c.failed) c.value = c_bs - c.value;  // price = c - CVA
  return t;
}

G1Table run_g1_table(const RunConfig& config, const std::vector<double>& etas) {
  if (etas.empty()) throw ConfigError("eta grid must be nonempty");
  G1Table t;
  t.etas = etas;
  for (double eta : etas) {
    if (!(eta > 0.0)) throw ConfigError("eta grid values must be positive");
    model::ModelParams p = config.params;
    p.cir.eta = eta;
    correxp::G1Breakdown b =
        correxp::g1(std::log(p.equity.s0), p.cir.lambda0, 0.0,
                    config.contract.maturity, p, config.contract, config.numerics);
    t.abs_g1.push_back(std::fabs(b.g1));
  }
  return t;
}

std::string to_csv(const TableArtifact& t, bool timings) {
  std::ostringstream out;
  out << "rho,method,value,ci95_halfwidth,err_vs_mc,runtime_s\n";
  // err_vs_mc available only when the MC column ran
  std::ptrdiff_t mc_col = -1;
  for (std::size_t j = 0; j < t.methods.size(); ++j)
    if (t.methods[j] == Method::MonteCarlo) mc_col = static_cast<std::ptrdiff_t>(j);

  for (std::size_t i = 0; i < t.rhos.size(); ++i) {
    for (std::size_t j = 0; j < t.methods.size(); ++j) {
      const Cell& c = t.cells[i][j];
      if (!c.present) continue;
      out << num_field(t.rhos[i]) << ',' << model::method_name(t.methods[j]) << ',';
      if (!c.failed) out << num_field(c.value);
      out << ',';
      if (!c.failed && c.has_ci) out << num_field(c.ci);
      out << ',';
      if (!c.failed && mc_col >= 0 && t.methods[j] != Method::MonteCarlo) {
        const Cell& m = t.cells[i][static_cast<std::size_t>(mc_col)];
        if (!m.failed && m.present) out << num_field(m.value - c.value);
      }
      out << ',';
      if (!c.failed && timings) out << num_field(c.runtime_s);
      out << '\n';
    }
  }
  return out.str();
}

std::string to_markdown(const TableArtifact& t, bool timings) {
  std::ostringstream out;
  std::ptrdiff_t mc_col = -1;
  for (std::size_t j = 0; j < t.methods.size(); ++j)
    if (t.methods[j] == Method::MonteCarlo) mc_col = static_cast<std::ptrdiff_t>(j);

  out << "| rho |";
  for (Method m : t.methods) out << ' ' << model::method_name(m) << " |";
  out << "\n|---|";
  for (std::size_t j = 0; j < t.methods.size(); ++j) out << "---|";
  out << '\n';
  for (std::size_t i = 0; i < t.rhos.size(); ++i) {
    out << "| " << num_field(t.rhos[i]) << " |";
    for (std::size_t j = 0; j < t.methods.size(); ++j) {
      const Cell& c = t.cells[i][j];
      if (!c.present) {
        out << " |";
        continue;
      }
      if (c.failed) {
        out << " failed |";
        continue;
      }
      out << ' ' << fixed5(c.value);
      if (c.has_ci)
        out << " (" << fixed5(c.ci) << ")";
      else if (mc_col >= 0 && t.methods[j] != Method::MonteCarlo &&
               !t.cells[i][static_cast<std::size_t>(mc_col)].failed)
        out << " (" << fixed5(t.cells[i][static_cast<std::size_t>(mc_col)].value - c.value)
            << ")";
      if (timings) out << " [" << num_field(c.runtime_s) << "s]";
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string g1_to_csv(const G1Table& t) {
  std::ostringstream out;
  out << "eta,abs_g1\n";
  for (std::size_t i = 0; i < t.etas.size(); ++i)
    out << num_field(t.etas[i]) << ',' << num_field(t.abs_g1[i]) << '\n';
  return out.str();
}

std::string g1_to_markdown(const G1Table& t) {
  std::ostringstream out;
  out << "| eta |";
  for (double e : t.etas) out << ' ' << num_field(e) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < t.etas.size(); ++i) out << "---|";
  out << "\n| abs(g1) |";
  for (double v : t.abs_g1) out << ' ' << fixed5(v) << " |";
  out << '\n';
  return out.str();
}

}  // namespace cvawwr::engine
