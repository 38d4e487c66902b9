#include <doctest.h>

#include <cmath>

#include "cvawwr/rng.hpp"

using cvawwr::num::NormalStream;

TEST_CASE("identical (seed, stream) reproduces the sequence") {
  NormalStream a(1234, 7), b(1234, 7);
  for (int i = 0; i < 10000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("distinct streams differ") {
  NormalStream a(1234, 0), b(1234, 1);
  int same = 0;
  for (int i = 0; i < 1000; ++i)
    if (a.next() == b.next()) ++same;
  CHECK(same == 0);
}

TEST_CASE("moments match the standard normal within CLT bands") {
  NormalStream s(2024, 0);
  const int n = 1'000'000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.next();
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(var - 1.0) < 0.006);
}
