#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace sagvne {

// Deterministic random source. Every draw in the project goes through this
// wrapper so a given seed reproduces the same sequence on any toolchain;
// std::uniform_*_distribution output is implementation-defined and is
// deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span == 0) return static_cast<std::int64_t>(gen_());  // full 64-bit range
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Exponential variate with the given mean; strictly positive.
  double exponential(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("exponential: mean must be > 0");
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return -mean * std::log(u);
  }

  // Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sagvne
