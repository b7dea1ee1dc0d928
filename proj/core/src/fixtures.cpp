#include "dcsd/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dcsd {

std::int64_t Random::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(static_cast<double>(span) * uniform());
}

double Random::normal(double mu, double sigma) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - uniform();
  const double v = uniform();
  return mu + sigma * std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

namespace {

double round_to(double x, double scale) { return std::round(x * scale) / scale; }

}  // namespace

DataTable planted_fixture(std::uint64_t seed, const PlantedOptions& options) {
  Random rng(seed);
  const std::size_t n = options.rows;

  std::vector<AttributeColumn> columns(5);
  for (int i = 0; i < 3; ++i) {
    columns[i].name = "x" + std::to_string(i + 1);
    columns[i].kind = AttributeKind::numeric;
    columns[i].numbers.reserve(n);
  }
  columns[3].name = "c1";
  columns[4].name = "c2";
  for (int i = 3; i < 5; ++i) {
    columns[i].kind = AttributeKind::categorical;
    columns[i].labels.reserve(n);
  }

  static const char* const kC1[] = {"a", "b", "c", "d"};
  static const char* const kC2[] = {"u", "v"};
  std::vector<double> y;
  y.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double x1 = round_to(rng.uniform(), 1000.0);
    const double x2 = round_to(rng.uniform(), 1000.0);
    const double x3 = round_to(rng.uniform(), 1000.0);
    const std::string c1 = kC1[rng.integer(0, 3)];
    const std::string c2 = kC2[rng.integer(0, 1)];
    double target = 0.0;
    if (c1 == "a" && x2 <= 0.3) {
      target = rng.normal(options.coherent_mean, options.coherent_sd);
    } else if (x1 > 0.5) {
      target = rng.normal(options.noisy_mean, options.noisy_sd);
    } else {
      target = rng.normal(options.baseline_mean, options.baseline_sd);
    }
    columns[0].numbers.emplace_back(x1);
    columns[1].numbers.emplace_back(x2);
    columns[2].numbers.emplace_back(x3);
    columns[3].labels.emplace_back(c1);
    columns[4].labels.emplace_back(c2);
    y.push_back(round_to(target, 100.0));
  }
  return DataTable("y", std::move(y), std::move(columns));
}

}  // namespace dcsd
