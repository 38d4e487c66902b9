// Serial-vs-OpenMP benchmark of the pricing kernels, plus per-method sweep
// timings at the base configuration.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cvawwr/corr_expansion.hpp"
#include "cvawwr/drift_adjustment.hpp"
#include "cvawwr/engine.hpp"
#include "cvawwr/montecarlo.hpp"
#include "cvawwr/vol_expansion.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  using namespace cvawwr;

  RunConfig cfg;  // defaults = base configuration
  const std::vector<double> rhos{-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9};

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif

  {
    auto t0 = Clock::now();
    auto rs = correxp::cva_sweep(cfg.params, cfg.contract, rhos, cfg.numerics);
    const double sweep = seconds_since(t0);
    t0 = Clock::now();
    correxp::cva(cfg.params, cfg.contract, 0.3, cfg.numerics);
    std::printf("corr-exp   sweep(10 rho): %8.3fs   single rho: %8.3fs   (cva[0]=%.5f)\n",
                sweep, seconds_since(t0), rs.front().value);
  }
  {
    model::NumericsConfig grid = cfg.numerics;
    grid.g1_mode = model::G1Mode::Grid;
    auto t0 = Clock::now();
    correxp::cva_sweep(cfg.params, cfg.contract, rhos, grid);
    std::printf("corr-exp   gridded mode sweep:           %8.3fs\n", seconds_since(t0));
  }
  {
    auto t0 = Clock::now();
    volexp::cva_sweep(cfg.params, cfg.contract, rhos, cfg.numerics);
    const double sweep = seconds_since(t0);
    t0 = Clock::now();
    volexp::cva(cfg.params, cfg.contract, 0.3, cfg.numerics);
    std::printf("vol-exp    sweep(10 rho): %8.3fs   single rho: %8.3fs\n",
                sweep, seconds_since(t0));
  }
  {
    auto t0 = Clock::now();
    driftadj::cva_sweep(cfg.params, cfg.contract, rhos, cfg.numerics);
    const double sweep = seconds_since(t0);
    t0 = Clock::now();
    driftadj::cva(cfg.params, cfg.contract, 0.3, cfg.numerics);
    std::printf("drift-adj  sweep(10 rho): %8.3fs   single rho: %8.3fs\n",
                sweep, seconds_since(t0));
  }

  model::McConfig mccfg;
  mccfg.paths = 100000;
  mccfg.steps = 500;
  {
    auto t0 = Clock::now();
    auto serial = mc::estimate_cva(cfg.params, cfg.contract, 0.3, mccfg, mc::ExecMode::Serial);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = mc::estimate_cva(cfg.params, cfg.contract, 0.3, mccfg, mc::ExecMode::Parallel);
    const double tp = seconds_since(t0);
    std::printf("mc (M=1e5, n=500)  serial: %8.3fs   parallel: %8.3fs   speedup: %.2fx\n",
                ts, tp, ts / tp);
    std::printf("mc agreement serial==parallel: %s (%.12f vs %.12f)\n",
                serial.value == parallel.value ? "bitwise" : "MISMATCH",
                serial.value, parallel.value);
  }
  return 0;
}
