/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/

#ifndef ORBITFLOW_PHILOX_HPP_
#define ORBITFLOW_PHILOX_HPP_

// Salmon et al. SC 2011. Parallel random numbers: as easy as 1, 2, 3.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace orbitflow {

/// Philox4x32 with 10 rounds. Stateless: output is a pure function of (counter, key).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter generate(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kW32A;
        key[1] += kW32B;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM4x32A) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM4x32B) * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kW32A = 0x9E3779B9;
  static constexpr std::uint32_t kW32B = 0xBB67AE85;
  static constexpr std::uint32_t kM4x32A = 0xD2511F53;
  static constexpr std::uint32_t kM4x32B = 0xCD9E8D57;
};

/// Random stream keyed by (seed, sample, slot). Block b of the stream is the
/// Philox output at counter (sample_lo, sample_hi, slot, b).
class KeyedStream {
 public:
  KeyedStream(std::uint64_t seed, std::uint64_t sample, std::uint32_t slot)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        sample_(sample),
        slot_(slot) {}

  /// Two uniforms in (0, 1) with 53-bit resolution from one Philox block.
  std::array<double, 2> uniform_pair(std::uint32_t block) const {
    const auto r = Philox4x32::generate(
        {static_cast<std::uint32_t>(sample_), static_cast<std::uint32_t>(sample_ >> 32), slot_,
         block},
        key_);
    return {to_open_unit(r[0], r[1]), to_open_unit(r[2], r[3])};
  }

  /// Two independent standard normals (Box-Muller) from one block.
  std::array<double, 2> normal_pair(std::uint32_t block) const {
    const auto [u1, u2] = uniform_pair(block);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  static double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) ^ (lo >> 11);
    return (static_cast<double>(bits & ((1ULL << 53) - 1)) + 0.5) * 0x1.0p-53;
  }

  Philox4x32::Key key_;
  std::uint64_t sample_;
  std::uint32_t slot_;
};

}  // namespace orbitflow

#endif  // ORBITFLOW_PHILOX_HPP_
