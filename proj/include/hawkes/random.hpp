#pragma once

#include <cstdint>

namespace hawkes {

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** seeded through splitmix64. Hand-rolled so that a fixed seed
// produces the same stream on every platform and standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  // Independent stream derived from a root seed and a replica index. Streams
  // depend only on (root_seed, index), never on which worker draws them.
  static RngStream substream(std::uint64_t root_seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();                        // (0, 1), never 0 or 1
  double exponential(double rate = 1.0);
  double normal();                         // standard normal, Marsaglia polar

 private:
  std::uint64_t s_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

std::int64_t sample_poisson(RngStream& rng, double mean);
double sample_gamma(RngStream& rng, double shape);  // unit scale

// Positive strictly stable variable S with E exp(-t S) = exp(-t^index),
// 0 < index <= 1 (Kanter's representation).
double sample_positive_stable(RngStream& rng, double index);

// Noncentral chi-square with `dof` degrees of freedom (any positive real).
double sample_noncentral_chisq(RngStream& rng, double dof, double noncentrality);

}  // namespace hawkes
