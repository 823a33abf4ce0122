#pragma once

#include <cstdint>
#include <random>

#include "reynolds/scalar.hpp"

namespace reynolds {

/// Deterministic random stream.  Draws go through engine() % span rather than
/// std::uniform_int_distribution so that byte-identical output does not
/// depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream i of a master seed (trial i uses substream i).
  static Rng substream(std::uint64_t seed, std::uint64_t i) {
    return Rng(seed * 0x9E3779B97F4A7C15ull + (i + 1) * 0xD1B54A32D192ED03ull);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant for sampling).
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Small element of the ring: integer in [-bound, bound] for Q/Z, any
  /// representative for F_p.
  Scalar scalar(const BaseRing& ring, std::int64_t bound = 5) {
    if (ring.kind() == RingKind::prime_field)
      return Scalar::from_int(ring, range(0, ring.characteristic() - 1));
    return Scalar::from_int(ring, range(-bound, bound));
  }

  Scalar nonzero_scalar(const BaseRing& ring, std::int64_t bound = 5) {
    for (;;) {
      Scalar s = scalar(ring, bound);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace reynolds
