#pragma once

#include <stdexcept>
#include <string>

namespace cvawwr::num {

struct SeriesSpec {
  int max_order = 60;      // series terms allowed before giving up
  double tail_tol = 1e-12; // stop once a term's relative contribution drops below
};

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard normal CDF / PDF.
double normal_cdf(double x);
double normal_pdf(double x);

// Modified Bessel function of the first kind, order nu > -1, argument z >= 0.
// Ascending series up to z = 30, scaled asymptotic expansion beyond; throws
// std::overflow_error once the value exceeds the double range (z ~ 705).
double bessel_i(double nu, double z, const SeriesSpec& spec = {});

// log I_nu(z); usable far beyond the overflow threshold of bessel_i.
double log_bessel_i(double nu, double z, const SeriesSpec& spec = {});

// Argument beyond which bessel_i switches from the ascending series to the
// asymptotic expansion.
inline constexpr double kBesselSeriesCutoff = 30.0;

}  // namespace cvawwr::num
