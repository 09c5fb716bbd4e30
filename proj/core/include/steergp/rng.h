#ifndef STEERGP_RNG_H_
#define STEERGP_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace steergp {

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds a tuple of counters into one stream key. Distinct tuples give
// statistically independent keys, so streams can be handed out per entry
// without any shared generator state.
constexpr std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p));
  return h;
}

// Counter-based generator: output n is mix64(key + n * gamma). Satisfies
// UniformRandomBitGenerator so it plugs into standard distributions.
class CounterEngine {
 public:
  using result_type = std::uint64_t;

  explicit CounterEngine(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stream tags keep keys of different consumers apart.
enum class Stream : std::uint64_t {
  kFilter = 1,
  kDraw = 2,
  kMoment = 3,
  kGpSample = 4,
  kConstraint = 5,
  kSuite = 6,
};

}  // namespace steergp

#endif  // STEERGP_RNG_H_
