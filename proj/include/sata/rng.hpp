#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Deterministic variate helpers. std::uniform_real_distribution and friends
// are implementation-defined, so everything here maps mt19937_64 output
// through fixed arithmetic to keep generated instances bit-stable.

namespace sata::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform double in (0, 1]; never zero, safe for log().
inline double uniform01_open(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling; unbiased and portable.
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
  const std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

// Standard normal via Box-Muller (one value per pair of uniforms).
inline double standard_normal(std::mt19937_64& g) {
  const double u1 = uniform01_open(g);
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[below(g, i)]);
  }
}

}  // namespace sata::rng
