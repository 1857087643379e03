#pragma once

#include <cstdint>

namespace quadid {

// Counter-based stream: every draw is a pure function of (seed, index, slot),
// so results do not depend on evaluation order or threading.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed) {}

  constexpr std::uint64_t word(std::uint64_t index, std::uint64_t slot) const {
    return splitmix64(splitmix64(splitmix64(seed_) ^ index) ^ (slot * 0xd1b54a32d192ed03ULL));
  }

  // Uniform integer in [lo, hi]. Rejection keeps it unbiased; each retry
  // consumes a fresh sub-slot.
  constexpr std::int64_t between(std::uint64_t index, std::uint64_t slot, std::int64_t lo,
                                 std::int64_t hi) const {
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % width;
    for (std::uint64_t retry = 0;; ++retry) {
      const std::uint64_t w = word(index, (slot << 8) + retry);
      if (w < limit) return lo + static_cast<std::int64_t>(w % width);
    }
  }

  constexpr std::int64_t symmetric(std::uint64_t index, std::uint64_t slot,
                                   std::int64_t range) const {
    return between(index, slot, -range, range);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace quadid
