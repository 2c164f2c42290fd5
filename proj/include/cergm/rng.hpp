#ifndef CERGM_RNG_HPP
#define CERGM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace cergm {

// Counter-based generator (splitmix64): output n is a fixed bijective mix of
// seed + n*gamma, so a (seed, counter) pair fully determines the stream and
// runs reproduce exactly across platforms. Version tag identifies the
// algorithm in serialized outputs.
class Rng {
 public:
  static constexpr const char* kVersion = "splitmix64-v1";

  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., n-1}, unbiased (rejection on the top range).
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = -n % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // Standard normal via Box-Muller on two uniforms.
  double next_normal() {
    double u1;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Independent child stream; distinct `stream` values give decorrelated
  // generators with a deterministic mapping from the parent seed.
  Rng derive(std::uint64_t stream) const {
    Rng mixer(state_ ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    Rng child(mixer.next_u64());
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cergm

#endif
