#ifndef IGM_RNG_HPP
#define IGM_RNG_HPP

#include <cstdint>

#include <Eigen/Core>

namespace igm {

// Counter-based generator: output i of stream `seed` is a pure function of
// (seed, i), so replay never depends on library internals or call batching.
// Mixing function is splitmix64 (Steele et al., fmix64 finalizer).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0, 1); 53-bit mantissa, never exactly 0
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal via the polar method (sqrt/log only, no trig, so the
  // value stream is stable across libm implementations)
  double next_normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// uniformly random direction: normalized vector of iid standard normals
Eigen::VectorXd random_unit_vector(CounterRng& rng, Eigen::Index n);

}  // namespace igm

#endif
