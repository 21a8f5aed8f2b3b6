#pragma once

#include <cstdint>
#include <string>

namespace mapsym {

/// Multiply a non-negative decimal string by a machine word. Group orders in
/// practice fit in 64 bits, but reported orders must not bake that in.
std::string decimal_mul(const std::string& decimal, std::uint64_t factor);

/// Deterministic splittable random stream. A thin wrapper over a 64-bit
/// mixer so that results do not depend on the standard library's
/// distribution implementations.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  /// Derive an independent stream, e.g. per generation and individual.
  static RandomStream derived(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

  std::uint64_t next();

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [0, 1).
  double unit();

private:
  std::uint64_t state_;
};

} // namespace mapsym
