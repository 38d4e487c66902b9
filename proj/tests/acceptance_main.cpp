// Acceptance suite: reproduces the benchmark tables and the exact-reduction
// gates at their stated tolerances; prints one PASS/FAIL line per criterion
// and exits nonzero if any criterion failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cvawwr/analytic.hpp"
#include "cvawwr/corr_expansion.hpp"
#include "cvawwr/drift_adjustment.hpp"
#include "cvawwr/engine.hpp"
#include "cvawwr/montecarlo.hpp"
#include "cvawwr/vol_expansion.hpp"

using namespace cvawwr;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<double> kRhos{-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9};

// Benchmark comparison columns (5 decimals).
const double kT1Corr[10] = {0.11780, 0.12712, 0.13643, 0.14575, 0.15506,
                            0.16438, 0.17369, 0.18301, 0.19233, 0.20164};
const double kT1Vol[10] = {0.11729, 0.12677, 0.13625, 0.14573, 0.15520,
                           0.16468, 0.17416, 0.18364, 0.19312, 0.20260};
const double kT1Drift[10] = {0.12215, 0.12970, 0.13769, 0.14615, 0.15508,
                             0.16448, 0.17437, 0.18473, 0.19558, 0.20692};
const double kT1Mc[10] = {0.12034, 0.12861, 0.13727, 0.14598, 0.15516,
                          0.16443, 0.17383, 0.18364, 0.19389, 0.20414};
const double kT2Corr[10] = {0.04460, 0.06979, 0.09499, 0.12018, 0.14537,
                            0.17057, 0.19576, 0.22095, 0.24614, 0.27134};
const double kT3Corr[10] = {0.00005, 0.03431, 0.06868, 0.10305, 0.13742,
                            0.17179, 0.20616, 0.24053, 0.27491, 0.30928};
const double kT4Corr[10] = {0.34222, 0.37230, 0.40238, 0.43246, 0.46254,
                            0.49262, 0.52270, 0.55278, 0.58286, 0.61294};
const double kT4Vol[10] = {0.34623, 0.37557, 0.40490, 0.43424, 0.46358,
                           0.49292, 0.52225, 0.55159, 0.58093, 0.61027};
const double kT5Corr[10] = {0.54936, 0.60299, 0.65663, 0.71026, 0.76390,
                            0.81753, 0.87117, 0.92480, 0.97844, 1.03207};
const double kT5Vol[10] = {0.55828, 0.61017, 0.66207, 0.71397, 0.76587,
                           0.81777, 0.86966, 0.92156, 0.97346, 1.02536};
const double kG1Eta[5] = {0.1, 0.2, 0.3, 0.4, 0.5};
const double kG1Abs[5] = {0.0466, 0.0898, 0.1260, 0.1532, 0.1719};

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %d [%s]: %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ColumnCheck {
  double worst = 0.0;
  int worst_row = -1;
};

ColumnCheck check_column(const std::vector<double>& mine, const double* ref) {
  ColumnCheck c;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    const double d = std::fabs(mine[i] - ref[i]);
    if (d > c.worst) {
      c.worst = d;
      c.worst_row = static_cast<int>(i);
    }
  }
  return c;
}

std::vector<double> column(const engine::TableArtifact& t, model::Method m) {
  std::vector<double> out;
  for (std::size_t i = 0; i < t.rhos.size(); ++i)
    for (std::size_t j = 0; j < t.methods.size(); ++j)
      if (t.methods[j] == m) out.push_back(t.cells[i][j].value);
  return out;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

model::ModelParams with_vols(double sigma, double eta) {
  model::ModelParams p;  // base
  p.equity.sigma = sigma;
  p.cir.eta = eta;
  return p;
}

// ---------------------------------------------------------------------------

void criterion1() {
  const model::Contract contract;
  const model::NumericsConfig numerics;

  const auto t0 = Clock::now();
  auto corr = correxp::cva_sweep(with_vols(0.1, 0.1), contract, kRhos, numerics);
  const double sweep_s = seconds_since(t0);
  std::vector<double> corr_col;
  for (const auto& r : corr) corr_col.push_back(r.value);

  std::vector<double> vol_col, drift_col;
  for (const auto& r : volexp::cva_sweep(with_vols(0.1, 0.1), contract, kRhos, numerics))
    vol_col.push_back(r.value);
  for (const auto& r : driftadj::cva_sweep(with_vols(0.1, 0.1), contract, kRhos, numerics))
    drift_col.push_back(r.value);

  const ColumnCheck cc = check_column(corr_col, kT1Corr);
  const ColumnCheck vc = check_column(vol_col, kT1Vol);
  const ColumnCheck dc = check_column(drift_col, kT1Drift);
  std::printf("  table 1 worst |diff|: corr-exp %.2e (tol 5e-4), vol-exp %.2e (tol 5e-4), "
              "drift-adj %.2e (tol 2e-3); corr-exp sweep %.3fs (tol 5s)\n",
              cc.worst, vc.worst, dc.worst, sweep_s);
  report(1, cc.worst <= 5e-4 && vc.worst <= 5e-4 && dc.worst <= 2e-3 && sweep_s <= 5.0,
         "table 1 reproduction (corr/vol/drift columns + sweep runtime)");
}

void criterion2() {
  const model::Contract contract;
  const model::NumericsConfig numerics;
  bool ok = true;

  for (int k = 0; k < 2; ++k) {
    const double eta = k == 0 ? 0.3 : 0.5;
    const double* ref = k == 0 ? kT2Corr : kT3Corr;
    std::vector<double> col;
    for (const auto& r : correxp::cva_sweep(with_vols(0.1, eta), contract, kRhos, numerics))
      col.push_back(r.value);
    const ColumnCheck c = check_column(col, ref);
    std::printf("  eta=%.1f corr-exp worst |diff| %.2e at rho=%+.1f (tol 1e-3)\n", eta,
                c.worst, kRhos[static_cast<std::size_t>(c.worst_row)]);
    ok = ok && c.worst <= 1e-3;
  }

  RunConfig cfg;
  engine::G1Table g1t = engine::run_g1_table(cfg, {kG1Eta, kG1Eta + 5});
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    worst = std::max(worst, std::fabs(g1t.abs_g1[i] - kG1Abs[i]));
  std::printf("  |g1| ladder worst |diff| %.2e (tol 1.5e-3)\n", worst);
  ok = ok && worst <= 1.5e-3;

  if (!ok) {
    // The eta = 0.5 column misses its gate by ~2e-4 because its slope
    // (0.171850 per unit rho) sits below the exact first-order coefficient.
    // Measure the model's slope directly: common-random-number MC gradient,
    // which criterion 6 shows resolves this to a few 1e-5.
    const model::Contract contract2;
    model::McConfig mcfg;
    const model::ModelParams p = with_vols(0.1, 0.5);
    const mc::McEstimate up = mc::estimate_price(p, contract2, 0.1, mcfg);
    const mc::McEstimate dn = mc::estimate_price(p, contract2, -0.1, mcfg);
    const double fd = (up.value - dn.value) / 0.2;
    std::printf("  informative: eta=0.5 CRN MC slope %.5f vs this g1 %.5f vs "
                "benchmark column slope -0.17185\n",
                fd, -g1t.abs_g1[4]);
  }
  report(2, ok, "eta = 0.3 / 0.5 corr-exp columns and the |g1| ladder");
}

void criterion3() {
  const model::Contract contract;
  const model::NumericsConfig numerics;
  bool ok = true;
  for (int k = 0; k < 2; ++k) {
    const double sigma = k == 0 ? 0.3 : 0.5;
    const double* rc = k == 0 ? kT4Corr : kT5Corr;
    const double* rv = k == 0 ? kT4Vol : kT5Vol;
    std::vector<double> corr_col, vol_col;
    for (const auto& r : correxp::cva_sweep(with_vols(sigma, 0.1), contract, kRhos, numerics))
      corr_col.push_back(r.value);
    for (const auto& r : volexp::cva_sweep(with_vols(sigma, 0.1), contract, kRhos, numerics))
      vol_col.push_back(r.value);
    const ColumnCheck cc = check_column(corr_col, rc);
    const ColumnCheck vc = check_column(vol_col, rv);
    std::printf("  sigma=%.1f worst |diff|: corr-exp %.2e, vol-exp %.2e (tol 1e-3)\n",
                sigma, cc.worst, vc.worst);
    ok = ok && cc.worst <= 1e-3 && vc.worst <= 1e-3;
  }
  report(3, ok, "sigma = 0.3 / 0.5 corr-exp and vol-exp columns");
}

void criterion4() {
  const model::ModelParams params = with_vols(0.1, 0.1);
  const model::Contract contract;
  model::McConfig mcfg;  // M = 1e6, n = 1000, control variate on
  bool ok = true;
  double worst_abs = 0.0, worst_sigma = 0.0, worst_time = 0.0;
  for (std::size_t i = 0; i < kRhos.size(); ++i) {
    const auto t0 = Clock::now();
    const mc::McEstimate e = mc::estimate_cva(params, contract, kRhos[i], mcfg);
    const double secs = seconds_since(t0);
    const double dev = std::fabs(e.value - kT1Mc[i]);
    worst_abs = std::max(worst_abs, dev);
    worst_sigma = std::max(worst_sigma, dev / e.std_error);
    worst_time = std::max(worst_time, secs);
  }
  std::printf("  table 1 MC: worst |diff| %.2e (tol 1e-3), worst dev %.2f own-sigma "
              "(tol 3), worst per-rho time %.1fs (tol 600)\n",
              worst_abs, worst_sigma, worst_time);
  ok = ok && worst_sigma <= 3.0 && worst_abs <= 1e-3 && worst_time <= 600.0;

  model::McConfig smoke = mcfg;
  smoke.paths = 100000;
  const auto t0 = Clock::now();
  const mc::McEstimate s = mc::estimate_cva(params, contract, 0.1, smoke);
  const double smoke_s = seconds_since(t0);
  std::printf("  smoke mode (M=1e5): %.2fs (tol 30), band %.1e\n", smoke_s,
              s.ci95_halfwidth);
  ok = ok && smoke_s <= 30.0;

  report(4, ok, "Monte Carlo benchmark reproduction at M=1e6, n=1000");
}

void criterion5() {
  const model::Contract contract;
  const model::NumericsConfig numerics;
  bool ok = true;

  // rho = 0 exact reductions against (1-R) c_BS (1 - G(T))
  const double ref = analytic::independence_cva(with_vols(0.1, 0.1), contract);
  const double corr0 =
      correxp::cva(with_vols(0.1, 0.1), contract, 0.0, numerics).value;
  const double drift0 =
      driftadj::cva(with_vols(0.1, 0.1), contract, 0.0, numerics).value;
  model::McConfig mcfg;
  const mc::McEstimate mc0 = mc::estimate_cva(with_vols(0.1, 0.1), contract, 0.0, mcfg);
  std::printf("  rho=0: corr-exp dev %.2e, drift-adj dev %.2e (tol 1e-5); MC dev %.2e"
              " vs 3se=%.2e\n",
              std::fabs(corr0 - ref), std::fabs(drift0 - ref), std::fabs(mc0.value - ref),
              3.0 * mc0.std_error);
  ok = ok && std::fabs(corr0 - ref) <= 1e-5 && std::fabs(drift0 - ref) <= 1e-5 &&
       std::fabs(mc0.value - ref) <= 3.0 * mc0.std_error;

  // kernel normalization over 20 random parameter draws
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> ul(0.005, 0.25), ug(0.02, 1.0),
      uth(0.01, 0.3), ue(0.05, 0.6), ud(0.05, 1.2);
  double worst_norm = 0.0;
  int done = 0;
  while (done < 20) {
    model::CirParams cir{ul(gen), ug(gen), uth(gen), ue(gen)};
    const analytic::MgfKernelParams kp = analytic::mgf_kernel_params(cir);
    if (kp.nu > 5.0) continue;
    const double dt = ud(gen);
    const double integral = num::integrate_semi_infinite(
        [&](double z) { return analytic::mgf_kernel(cir.lambda0, z, 0.0, dt, cir); },
        analytic::mean_path(dt, cir), kp.nu, num::QuadratureSpec{1e-12, 1e-10, 200});
    const double bond = analytic::survival(dt, cir);
    worst_norm = std::max(worst_norm, std::fabs(integral - bond) / bond);
    ++done;
  }
  std::printf("  kernel normalization worst rel dev %.2e (tol 1e-6)\n", worst_norm);
  ok = ok && worst_norm <= 1e-6;

  // dG mass
  double worst_mass = 0.0;
  for (double eta : {0.1, 0.5}) {
    model::CirParams cir{0.04, 0.2, 0.05, eta};
    const double mass = num::integrate_adaptive(
        [&](double t) { return analytic::survival_density(t, cir); }, 0.0, 1.0,
        num::QuadratureSpec{1e-13, 1e-12, 200});
    worst_mass = std::max(worst_mass, std::fabs(mass - (1.0 - analytic::survival(1.0, cir))));
  }
  std::printf("  survival-density mass worst dev %.2e (tol 1e-10)\n", worst_mass);
  ok = ok && worst_mass <= 1e-10;

  // equity-factor martingale identity at r = 0
  const double lim = 100.0 * num::normal_cdf(0.05);
  double worst_mart = 0.0;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9})
    worst_mart = std::max(
        worst_mart,
        std::fabs(correxp::equity_factor(std::log(100.0), 0.0, alpha, 1.0, 0.1, 0.0,
                                         100.0, numerics.quad) -
                  lim));
  std::printf("  equity-factor martingale worst dev %.2e (tol 1e-6)\n", worst_mart);
  ok = ok && worst_mart <= 1e-6;

  report(5, ok, "exact-reduction hard gates");
}

void criterion6() {
  const model::Contract contract;
  const model::NumericsConfig numerics;
  bool ok = true;
  for (double eta : {0.1, 0.3}) {
    const model::ModelParams params = with_vols(0.1, eta);
    model::McConfig mcfg;  // common random numbers via the shared seed
    const mc::McEstimate up = mc::estimate_price(params, contract, 0.1, mcfg);
    const mc::McEstimate dn = mc::estimate_price(params, contract, -0.1, mcfg);
    const double fd = (up.value - dn.value) / 0.2;
    const double band =
        3.0 * std::sqrt(up.std_error * up.std_error + dn.std_error * dn.std_error) / 0.2;
    const correxp::G1Breakdown b =
        correxp::g1(std::log(100.0), 0.04, 0.0, 1.0, params, contract, numerics);
    std::printf("  eta=%.1f: FD slope %.5f vs g1 %.5f, |diff| %.2e, band %.2e\n", eta,
                fd, b.g1, std::fabs(fd - b.g1), band);
    ok = ok && std::fabs(fd - b.g1) <= band;
  }
  report(6, ok, "finite-difference MC gradient matches g1");
}

void criterion7() {
  engine::RunSpec spec;
  spec.config.mc.paths = 200000;
  spec.config.mc.steps = 500;
  spec.methods = {model::Method::CorrExp, model::Method::VolExp, model::Method::DriftAdj,
                  model::Method::MonteCarlo, model::Method::Independence};
  spec.rho_grid = {-0.5, 0.0, 0.5};
  const std::string a = engine::to_csv(engine::run_table(spec), spec.timings);
  const std::string b = engine::to_csv(engine::run_table(spec), spec.timings);
  std::printf("  csv bytes: %zu vs %zu, %s\n", a.size(), b.size(),
              a == b ? "identical" : "DIFFER");
  report(7, a == b, "byte-identical CSV for identical config and seed");
}

void criterion8() {
  bool ok = true;
  struct Set {
    const char* name;
    model::CirParams cir;
  };
  const Set sets[2] = {{"set1", {0.03, 0.02, 0.161, 0.08}},
                       {"set3", {0.01, 0.8, 0.02, 0.2}}};
  const std::vector<double> rhos{-0.9, -0.45, 0.0, 0.45, 0.9};

  for (const Set& s : sets) {
    for (double T : {1.0, 5.0}) {
      model::ModelParams params;
      params.cir = s.cir;
      model::Contract contract;
      contract.maturity = T;
      model::NumericsConfig numerics;
      model::McConfig mcfg;
      mcfg.paths = 200000;
      mcfg.steps = static_cast<int>(500 * T);

      engine::RunSpec spec;
      spec.config.params = params;
      spec.config.contract = contract;
      spec.config.numerics = numerics;
      spec.config.mc = mcfg;
      spec.methods = {model::Method::CorrExp, model::Method::VolExp,
                      model::Method::DriftAdj, model::Method::MonteCarlo,
                      model::Method::Independence};
      spec.rho_grid = rhos;
      const engine::TableArtifact t = engine::run_table(spec);

      // plot-data emission (figure analogue)
      std::ofstream(std::string("acceptance_") + s.name + "_T" +
                    std::to_string(static_cast<int>(T)) + ".csv")
          << engine::to_csv(t, false);

      bool finite = !t.any_failed;
      bool monotone = true;
      for (model::Method m : {model::Method::CorrExp, model::Method::VolExp,
                              model::Method::DriftAdj, model::Method::MonteCarlo}) {
        const std::vector<double> col = column(t, m);
        for (double v : col) finite = finite && std::isfinite(v);
        for (std::size_t i = 1; i < col.size(); ++i)
          monotone = monotone && col[i] >= col[i - 1];
      }
      const double corr0 = correxp::cva(params, contract, 0.0, numerics).value;
      const double vol0 = volexp::cva(params, contract, 0.0, numerics).value;
      const double gap = std::fabs(corr0 - vol0);
      const bool gap_applies = params.cir.eta <= 0.1;
      std::printf("  %s T=%g: finite %s, monotone %s, corr/vol rho=0 gap %.2e%s\n",
                  s.name, T, finite ? "yes" : "NO", monotone ? "yes" : "NO", gap,
                  gap_applies ? " (tol 1e-4)" : " (informative)");
      ok = ok && finite && monotone && (!gap_applies || gap <= 1e-4);
    }
  }
  report(8, ok, "parameter-set sweeps: finite, monotone, small-eta rho=0 agreement");
}

}  // namespace

int main() {
  std::printf("acceptance suite: benchmark reproduction gates\n");
  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("total: %d of 8 criteria passed in %.1fs\n", 8 - g_failures,
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
