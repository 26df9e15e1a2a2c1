#ifndef RAMSEY_RNG_HPP
#define RAMSEY_RNG_HPP

#include <cstdint>

namespace ramsey {

// Counter-based stream: every deviate is a pure function of
// (seed, experiment, trial, counter), so trials can run on any thread in any
// order and still reproduce bit-for-bit.
struct RngSpec {
  uint64_t seed = 0;
  uint64_t experiment = 0;
  uint64_t trial = 0;

  RngSpec with_trial(uint64_t t) const { return {seed, experiment, t}; }
};

namespace detail {
// splitmix64 finalizer
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

inline uint64_t counter_rng(const RngSpec& s, uint64_t counter) {
  uint64_t z = detail::mix64(s.seed + 0x9e3779b97f4a7c15ULL);
  z = detail::mix64(z ^ (s.experiment + 0xd1b54a32d192ed03ULL));
  z = detail::mix64(z ^ (s.trial + 0x8cb92ba72f3d8dd7ULL));
  return detail::mix64(z ^ (counter + 0x2545f4914f6cdd1dULL));
}

// Uniform deviate in [0, 1) with 53 random bits.
inline double counter_uniform(const RngSpec& s, uint64_t counter) {
  return static_cast<double>(counter_rng(s, counter) >> 11) * 0x1.0p-53;
}

// Stateful convenience wrapper over a fixed stream.
class CounterRng {
 public:
  explicit CounterRng(RngSpec spec) : spec_(spec) {}

  uint64_t next_u64() { return counter_rng(spec_, counter_++); }
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  // Unbiased integer in [0, bound) by rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }
  bool next_bernoulli(double p) { return next_uniform() < p; }

 private:
  RngSpec spec_;
  uint64_t counter_ = 0;
};

}  // namespace ramsey

#endif  // RAMSEY_RNG_HPP
