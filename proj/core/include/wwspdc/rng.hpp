#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace wwspdc {

/**
 * Philox4x32-10 counter-based generator (Salmon et al., SC'11).
 *
 * Stateless: every 128-bit counter block is hashed independently under a
 * 64-bit key, so the stream is random access and identical for any
 * evaluation order.
 */
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/**
 * Seeded source of standard normal draws, addressed by sample index.
 *
 * Draw k consumes two Philox blocks (counter = {index_lo, index_hi, block, 0},
 * key = seed). Each pair of 32-bit words forms one 53-bit uniform in (0, 1),
 * and uniforms are mapped to normals with the Box-Muller transform. The
 * layout is frozen; changing it requires a new id() string.
 */
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /** Four independent N(0, sigma^2) draws for the given sample index. */
  std::array<double, 4> normals_at(std::uint64_t index, double sigma) const;

  std::uint64_t seed() const { return seed_; }

  static constexpr std::string_view id() { return "philox4x32-10+box-muller/v1"; }

 private:
  std::uint64_t seed_;
};

}  // namespace wwspdc
