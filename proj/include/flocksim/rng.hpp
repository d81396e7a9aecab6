#pragma once

#include <cstdint>
#include <random>

namespace flocksim {

// Seeded random source with a fixed raw-bits-to-double mapping, so identical
// seeds produce identical streams on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = (engine_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flocksim
