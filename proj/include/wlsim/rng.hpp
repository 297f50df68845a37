#pragma once

#include <cstdint>

namespace wlsim {

// SplitMix64 (Steele et al.; the SplittableRandom mixer). One instance per
// packet transmission, seeded from (run seed, step, route index), so the
// per-route walks draw identical values no matter which thread or order
// executes them.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Exact at both endpoints: p = 0 never fires, p = 1 always fires.
  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

// Derives the stream seed for one packet: two mixing rounds keyed by step
// and lane (route index) on top of the run seed.
inline std::uint64_t substream_seed(std::uint64_t run_seed, std::uint64_t step,
                                    std::uint64_t lane) {
  SplitMix64 a(run_seed ^ (0xA0761D6478BD642FULL * (step + 1)));
  SplitMix64 b(a.next_u64() ^ (0xE7037ED1A0B428DBULL * (lane + 1)));
  return b.next_u64();
}

}  // namespace wlsim
