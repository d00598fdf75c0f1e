// Seeded random numbers with bit-reproducible draws: distributions are built
// directly from the standardized mt19937_64 stream, never from the
// implementation-defined std:: distribution adaptors.
#ifndef PHASEFLOW_RNG_HPP
#define PHASEFLOW_RNG_HPP

#include <cstdint>
#include <random>

namespace phaseflow {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // uniform in [0,1) with 53-bit resolution
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // uniform in {0,...,n-1}
  int uniform_int(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace phaseflow

#endif  // PHASEFLOW_RNG_HPP
