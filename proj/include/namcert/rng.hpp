#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace namcert {

/// SplitMix64 with a hand-rolled Box-Muller on top. Deliberately not
/// <random>: the standard distributions are implementation-defined, and
/// benchmark output must be byte-identical across toolchains for a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// uniform in [a, b)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 2.0 * std::acos(-1.0);
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  /// point on the radius-`radius` sphere in R^p
  std::vector<double> sphere_point(int p, double radius) {
    std::vector<double> x(p);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < p; ++i) {
        x[i] = normal();
        norm2 += x[i] * x[i];
      }
    } while (norm2 == 0.0);
    const double scale = radius / std::sqrt(norm2);
    for (int i = 0; i < p; ++i) x[i] *= scale;
    return x;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace namcert
