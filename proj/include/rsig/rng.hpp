#pragma once

#include <cstdint>

namespace rsig {

// Identifies one sampling call: `master` is the user-chosen seed, `stream`
// the substream index (trial number, grid point, ...). The pair fully
// determines every random draw of the call, independent of scheduling.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

// SplitMix64 output function (Stafford mix13). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Published substream derivation: derive(base, i) = mix64(base + (i+1)*phi64)
// with phi64 = 0x9E3779B97F4A7C15. Injective in i for fixed base, so distinct
// substreams never collide. External tools can reproduce any single trial
// from this formula plus the SplitMix64 step below.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(base + (index + 1) * detail::kGolden);
}

inline std::uint64_t seed_of(const Seed& s) { return derive_seed(s.master, s.stream); }

// Counter-based 64-bit generator: state advances by a fixed odd constant and
// the output is mix64 of the counter (SplitMix64). Cheap to seed, no warmup.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  explicit SplitMix64(const Seed& seed) : state_(seed_of(seed)) {}

  std::uint64_t next() {
    state_ += detail::kGolden;
    return mix64(state_);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace rsig
