#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvawwr::num {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
};

// Thrown when the subdivision budget is exhausted; carries the best estimate
// reached so far together with its error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}
  double best_estimate() const { return best_; }
  double error_bound() const { return bound_; }

 private:
  double best_;
  double bound_;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7/15) on [a, b]. The returned value satisfies
// |error| <= max(abs_tol, rel_tol * |result|) or a QuadratureError is thrown.
// Deterministic: the segment reduction is ordered by interval position.
double integrate_adaptive(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec);

// Same, with user-supplied interior breakpoints seeding the initial partition
// (used when the caller knows where the integrand concentrates).
double integrate_adaptive(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec,
                          const std::vector<double>& breakpoints);

// Integral of f over (0, inf) for integrands that behave like
// zeta^edge_power * (smooth, exponentially decaying) near zero.
// Mapped to (0,1) by zeta = scale * (v/(1-v))^p where p neutralizes the
// algebraic edge; p = 1 recovers the plain u = zeta/(scale+zeta) substitution.
// Concentrated kernels must be anchored through `breakpoints` (zeta
// coordinates); an unsampled narrow peak is invisible to the error estimate.
double integrate_semi_infinite(const Integrand& f, double scale,
                               double edge_power, const QuadratureSpec& spec,
                               const std::vector<double>& breakpoints = {});

}  // namespace cvawwr::num
