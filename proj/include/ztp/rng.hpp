#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

// Deterministic randomness for the simulator. All simulation output must be
// reproducible from (seed, trial, stream label) alone, so this header avoids
// std::uniform_*_distribution and libm transcendentals, whose results are
// implementation-defined and may differ between standard libraries. The
// mt19937_64 engine itself is fully specified and portable.

namespace ztp {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t hash_label(std::string_view label) {
  // FNV-1a 64-bit.
  uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : label) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Trial i of a run seeded with `base` gets seed split_seed(base, i). Samples
// for trial i are therefore unaffected by the total trial count.
inline uint64_t split_seed(uint64_t base, uint64_t index) {
  uint64_t s = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  return splitmix64(s);
}

namespace detail {

// ln(x) for finite x > 0 using only IEEE basic operations (+,-,*,/), which
// round identically on every conforming platform.
inline double portable_log(double x) {
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  // Move m into [sqrt(0.5), sqrt(2)) so the series argument stays small.
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    --e;
  }
  const double s = (m - 1.0) / (m + 1.0);  // |s| <= 0.1716
  const double s2 = s * s;
  double term = s;
  double sum = 0.0;
  for (int k = 1; k < 30; k += 2) {
    sum += term / k;
    term *= s2;
  }
  const double kLn2 = 0.69314718055994530942;
  return 2.0 * sum + e * kLn2;
}

// e^x for |x| within the double range, same portability constraints.
inline double portable_exp(double x) {
  const double kLn2 = 0.69314718055994530942;
  const double k = std::nearbyint(x / kLn2);
  const double r = x - k * kLn2;  // |r| <= ln2/2
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i < 20; ++i) {
    term *= r / i;
    sum += term;
  }
  return std::ldexp(sum, static_cast<int>(k));
}

}  // namespace detail

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
  // distribution exact and the draw sequence platform-independent.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    if (lo >= hi) return lo;
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<int64_t>(draw % span);
  }

  // Standard normal via the Marsaglia polar method (one value per call).
  double normal() {
    for (;;) {
      const double u = 2.0 * next_unit() - 1.0;
      const double v = 2.0 * next_unit() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        return u * std::sqrt(-2.0 * detail::portable_log(s) / s);
      }
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Dedicated stream per (trial seed, purpose label). Scenarios that share a
// label draw identical values for it, which is what makes paired-seed
// comparisons (LOS vs NLOS, secure vs non-secure) monotone per trial.
inline Rng stream_for(uint64_t trial_seed, std::string_view label) {
  uint64_t s = trial_seed ^ hash_label(label);
  return Rng(splitmix64(s));
}

}  // namespace ztp
