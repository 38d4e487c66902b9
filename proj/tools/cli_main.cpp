// cvawwr: vulnerable-call pricing and CVA under wrong-way risk.
// Subcommands: price, cva, table, g1. See README for the config schema.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cvawwr/engine.hpp"

namespace {

using cvawwr::ConfigError;
using cvawwr::engine::Format;
using cvawwr::engine::RunSpec;
using cvawwr::model::Method;

std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> out;
  // range form a:b:n
  if (std::count(text.begin(), text.end(), ':') == 2) {
    double a, b;
    int n;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
      throw ConfigError(std::string(what) + ": malformed range '" + text + "'");
    for (int i = 0; i < n; ++i)
      out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
    return out;
  }
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError(std::string(what) + ": not a number: '" + tok + "'");
    }
  }
  if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto m = cvawwr::model::method_from_name(tok);
    if (!m)
      throw ConfigError("unknown method '" + tok +
                        "' (expected corr-exp|drift-adj|vol-exp|mc|independence)");
    out.push_back(*m);
  }
  if (out.empty()) throw ConfigError("method list is empty");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + out_path);
  out << text;
}

struct CommonArgs {
  std::string config_path;
  std::string methods = "corr-exp,vol-exp,drift-adj,mc,independence";
  std::string rho;
  std::string out_path;
  std::string format = "csv";
  bool timings = false;
  std::optional<long long> seed;
  std::optional<long long> paths;
  std::optional<int> steps;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_methods) {
  cmd->add_option("--config", a.config_path, "model/contract config file")->required();
  if (with_methods) cmd->add_option("--methods", a.methods, "comma-separated method list");
  cmd->add_option("--rho", a.rho, "correlation grid: list 'a,b,c' or range 'a:b:n'");
  cmd->add_option("--out", a.out_path, "output path (default stdout)");
  cmd->add_option("--format", a.format, "csv|markdown")->check(CLI::IsMember({"csv", "markdown"}));
  cmd->add_flag("--timings", a.timings, "include per-cell runtimes in the output");
  cmd->add_option("--seed", a.seed, "override [mc] seed");
  cmd->add_option("--paths", a.paths, "override [mc] paths");
  cmd->add_option("--steps", a.steps, "override [mc] steps");
}

RunSpec build_spec(const CommonArgs& a) {
  RunSpec spec;
  spec.config = cvawwr::load_config(a.config_path);
  const auto v = cvawwr::model::validate(spec.config.params, spec.config.contract);
  for (const auto& w : v.warnings) std::cerr << "warning: " << w << "\n";
  if (a.seed) spec.config.mc.seed = static_cast<std::uint64_t>(*a.seed);
  if (a.paths) spec.config.mc.paths = *a.paths;
  if (a.steps) spec.config.mc.steps = *a.steps;
  spec.methods = parse_methods(a.methods);
  spec.rho_grid = a.rho.empty()
                      ? std::vector<double>{spec.config.params.corr.rho}
                      : parse_grid(a.rho, "--rho");
  spec.format = a.format == "markdown" ? Format::Markdown : Format::Csv;
  spec.timings = a.timings;
  return spec;
}

int run_table_like(const CommonArgs& a, bool price_not_cva) {
  RunSpec spec = build_spec(a);
  cvawwr::engine::TableArtifact t =
      price_not_cva ? cvawwr::engine::run_price_table(spec)
                    : cvawwr::engine::run_table(spec);
  for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
  emit(spec.format == Format::Csv ? cvawwr::engine::to_csv(t, spec.timings)
                                  : cvawwr::engine::to_markdown(t, spec.timings),
       a.out_path);
  if (t.any_failed) {
    for (const auto& row : t.cells)
      for (const auto& c : row)
        if (c.failed) std::cerr << "error: " << c.error << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vulnerable European call pricing and CVA under wrong-way risk"};
  app.require_subcommand(1);

#ifdef _OPENMP
  if (const char* env = std::getenv("CVAWWR_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CommonArgs price_args, cva_args, table_args, g1_args;
  std::string eta_grid = "0.1,0.2,0.3,0.4,0.5";

  CLI::App* price = app.add_subcommand("price", "vulnerable call price per method");
  add_common(price, price_args, true);
  CLI::App* cva = app.add_subcommand("cva", "CVA per method");
  add_common(cva, cva_args, true);
  CLI::App* table = app.add_subcommand("table", "method-comparison table over a rho grid");
  add_common(table, table_args, true);
  CLI::App* g1cmd = app.add_subcommand("g1", "first-order coefficient magnitude per eta");
  add_common(g1cmd, g1_args, false);
  g1cmd->add_option("--eta", eta_grid, "eta grid: list or range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (price->parsed()) return run_table_like(price_args, true);
    if (cva->parsed()) return run_table_like(cva_args, false);
    if (table->parsed()) return run_table_like(table_args, false);
    if (g1cmd->parsed()) {
      cvawwr::RunConfig cfg = cvawwr::load_config(g1_args.config_path);
      cvawwr::engine::G1Table t =
          cvawwr::engine::run_g1_table(cfg, parse_grid(eta_grid, "--eta"));
      emit(g1_args.format == "markdown" ? cvawwr::engine::g1_to_markdown(t)
                                        : cvawwr::engine::g1_to_csv(t),
           g1_args.out_path);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
