#include "hawkes/random.hpp"

#include <cmath>
#include <stdexcept>

namespace hawkes {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) {
  std::uint64_t st = seed;
  for (auto& word : s_) word = splitmix64(st);
}

RngStream RngStream::substream(std::uint64_t root_seed, std::uint64_t index) {
  std::uint64_t st = root_seed;
  std::uint64_t mixed = splitmix64(st) + 0x9E3779B97F4A7C15ULL * (index + 1);
  return RngStream(splitmix64(mixed));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform() {
  // (k + 0.5) * 2^-53 with k in [0, 2^53): strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
  return -std::log(uniform()) / rate;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  has_spare_ = true;
  return u * f;
}

std::int64_t sample_poisson(RngStream& rng, double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson mean must be nonnegative");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Knuth's product method.
    const double limit = std::exp(-mean);
    double p = 1.0;
    std::int64_t k = 0;
    do {
      ++k;
      p *= rng.uniform();
    } while (p > limit && k < 1024);
    return k - 1;
  }
  // Hormann's PTRS transformed rejection.
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

double sample_gamma(RngStream& rng, double shape) {
  if (shape <= 0.0) throw std::invalid_argument("gamma shape must be positive");
  if (shape < 1.0) {
    // Boost by one and correct with a power of a uniform.
    return sample_gamma(rng, shape + 1.0) * std::pow(rng.uniform(), 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_positive_stable(RngStream& rng, double index) {
  if (index <= 0.0 || index > 1.0) {
    throw std::invalid_argument("stable index must lie in (0, 1]");
  }
  if (index == 1.0) return 1.0;
  const double pi = 3.14159265358979323846;
  const double theta = pi * rng.uniform();
  const double w = rng.exponential();
  // Kanter: S = [sin((1-a)θ)/W]^{(1-a)/a} sin(aθ) sin(θ)^{-1/a}, θ = πU.
  const double log_s =
      (1.0 - index) / index * (std::log(std::sin((1.0 - index) * theta)) - std::log(w)) +
      std::log(std::sin(index * theta)) - std::log(std::sin(theta)) / index;
  return std::exp(log_s);
}

double sample_noncentral_chisq(RngStream& rng, double dof, double noncentrality) {
  if (dof <= 0.0) throw std::invalid_argument("dof must be positive");
  if (noncentrality < 0.0) throw std::invalid_argument("noncentrality must be nonnegative");
  if (noncentrality == 0.0) return 2.0 * sample_gamma(rng, 0.5 * dof);
  if (dof > 1.0) {
    const double z = rng.normal() + std::sqrt(noncentrality);
    return z * z + 2.0 * sample_gamma(rng, 0.5 * (dof - 1.0));
  }
  // Poisson mixture of central chi-squares, exact for any dof > 0.
  const std::int64_t j = sample_poisson(rng, 0.5 * noncentrality);
  return 2.0 * sample_gamma(rng, 0.5 * dof + static_cast<double>(j));
}

}  // namespace hawkes
