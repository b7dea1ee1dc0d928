#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dcsd/dataset.hpp"

namespace dcsd {

// Portable random source: the same seed gives the same stream with any
// standard library (unlike std::*_distribution).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  double normal(double mu, double sigma);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct PlantedOptions {
  std::size_t rows = 400;
  double baseline_mean = 10.0;
  double baseline_sd = 1.0;
  // Large group x1 > 0.5: high shift, wide spread.
  double noisy_mean = 14.0;
  double noisy_sd = 3.0;
  // Small group c1 = a and x2 <= 0.3: slightly higher shift, tight spread.
  double coherent_mean = 15.0;
  double coherent_sd = 0.3;
};

/// Synthetic table with two planted high-target groups: a large noisy one and
/// a small coherent one. Columns x1, x2, x3 (numeric in [0,1], rounded to
/// 3 digits), c1 in {a,b,c,d}, c2 in {u,v}; target y rounded to 2 digits.
DataTable planted_fixture(std::uint64_t seed, const PlantedOptions& options = {});

// Seeds of the bundled planted fixtures.
inline const std::vector<std::uint64_t> kBundledFixtureSeeds = {1, 2, 3, 4, 5};

}  // namespace dcsd
