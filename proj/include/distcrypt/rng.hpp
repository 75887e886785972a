#pragma once

#include <cstdint>
#include <random>

#include "distcrypt/matrix.hpp"

namespace distcrypt {

/// Seeded generator with platform-independent bounded sampling. The standard
/// distributions are implementation-defined, so outputs are built from raw
/// mt19937_64 words here to keep seeded files byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform in [0, bound) for arbitrary-precision bound > 0.
  Integer below(const Integer& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    for (;;) {
      Integer x = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = engine_();
        if (w == 0 && top_bits < 64)
          word &= (std::uint64_t{1} << top_bits) - 1;
        x <<= 64;
        x += Integer(static_cast<unsigned long>(word >> 32)) << 32;
        x += static_cast<unsigned long>(word & 0xffffffffu);
      }
      if (x < bound) return x;
    }
  }

  /// Uniform in [lo, hi] for arbitrary-precision bounds.
  Integer range(const Integer& lo, const Integer& hi) {
    return lo + below(Integer(hi - lo + 1));
  }

  int sign() { return (engine_() & 1u) ? 1 : -1; }
  bool coin() { return engine_() & 1u; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace distcrypt
