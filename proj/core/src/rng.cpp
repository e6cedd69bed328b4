#include "wwspdc/rng.hpp"

#include <cmath>
#include <numbers>

namespace wwspdc {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& ctr,
                       const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// Uniform in (0, 1): 53-bit mantissa, offset half a ulp away from 0 and 1.
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) {
  round_once(counter, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kWeyl0;
    key[1] += kWeyl1;
    round_once(counter, key);
  }
  return counter;
}

std::array<double, 4> CounterRng::normals_at(std::uint64_t index,
                                             double sigma) const {
  const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(seed_),
                                         static_cast<std::uint32_t>(seed_ >> 32)};
  const auto lo = static_cast<std::uint32_t>(index);
  const auto hi = static_cast<std::uint32_t>(index >> 32);

  const auto block0 = philox4x32_10({lo, hi, 0u, 0u}, key);
  const auto block1 = philox4x32_10({lo, hi, 1u, 0u}, key);
  const double u0 = to_open_unit(block0[0], block0[1]);
  const double u1 = to_open_unit(block0[2], block0[3]);
  const double u2 = to_open_unit(block1[0], block1[1]);
  const double u3 = to_open_unit(block1[2], block1[3]);

  const double r0 = sigma * std::sqrt(-2.0 * std::log(u0));
  const double r1 = sigma * std::sqrt(-2.0 * std::log(u2));
  const double t0 = 2.0 * std::numbers::pi * u1;
  const double t1 = 2.0 * std::numbers::pi * u3;
  return {r0 * std::cos(t0), r0 * std::sin(t0), r1 * std::cos(t1),
          r1 * std::sin(t1)};
}

}  // namespace wwspdc
