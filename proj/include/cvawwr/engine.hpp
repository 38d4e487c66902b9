#pragma once

#include <string>
#include <vector>

#include "cvawwr/config_io.hpp"
#include "cvawwr/model.hpp"

namespace cvawwr::engine {

enum class Format { Csv, Markdown };

struct RunSpec {
  RunConfig config;
  std::vector<model::Method> methods;
  std::vector<double> rho_grid;
  Format format = Format::Csv;
  bool timings = false;   // off by default so output is byte-stable across runs
  bool mc_serial = false; // force the serial Monte Carlo path (benchmarking)
};

struct Cell {
  bool present = false;  // method ran for this rho
  bool failed = false;
  double value = 0.0;
  bool has_ci = false;
  double ci = 0.0;
  double runtime_s = 0.0;
  std::string error;
};

struct TableArtifact {
  std::vector<double> rhos;
  std::vector<model::Method> methods;
  // cells[i][j]: rho i, method j
  std::vector<std::vector<Cell>> cells;
  bool any_failed = false;
  // non-fatal oddities, e.g. an approximation crossing below zero at extreme
  // correlation; surfaced on stderr by the CLI
  std::vector<std::string> warnings;

  const Cell* find(double rho, model::Method m) const;
};

// Runs every requested method over the rho grid. Methods that are linear in
// rho are computed once and swept for free; the measure-change and Monte
// Carlo methods are repeated per rho. A method failure marks its cells and
// leaves the other methods intact.
TableArtifact run_table(const RunSpec& spec);

// |g1| per intensity volatility, the first-order coefficient magnitude table.
struct G1Table {
  std::vector<double> etas;
  std::vector<double> abs_g1;
};

G1Table run_g1_table(const RunConfig& config, const std::vector<double>& etas);

// CSV schema: rho,method,value,ci95_halfwidth,err_vs_mc,runtime_s with empty
// fields for non-applicable cells. err_vs_mc is (MC - method), present only
// when the MC column was part of the run.
std::string to_csv(const TableArtifact& t, bool timings);
std::string to_markdown(const TableArtifact& t, bool timings);

std::string g1_to_csv(const G1Table& t);
std::string g1_to_markdown(const G1Table& t);

// Per-method vulnerable-price rows at the same grid (price = c_BS - CVA).
TableArtifact run_price_table(const RunSpec& spec);

}  // namespace cvawwr::engine
