#pragma once

#include <cstdint>
#include <random>

namespace grlmp {

/// Seeded pseudo-random stream owned by the caller.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and uniforms are formed from the top 53 bits by hand rather than
/// through std::uniform_real_distribution (whose algorithm is unspecified).
/// Draws are therefore reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1): (k + 0.5) / 2^53, k in [0, 2^53).
  /// Zero and one are never returned.
  double uniform_open() {
    const std::uint64_t k = engine_() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace grlmp
