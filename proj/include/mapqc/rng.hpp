#ifndef MAPQC_RNG_HPP
#define MAPQC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mapqc {

// Replication-addressed RNG stream specification: distinct
// (masterSeed, replicationIndex) pairs give independent streams, identical
// pairs reproduce the same stream regardless of scheduling or worker count.
struct RngStreamSpec {
  std::uint64_t masterSeed = 0;
  std::uint64_t replicationIndex = 0;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based generator (splitmix64 output function applied to
// key + counter * golden gamma). Stateless apart from the counter, so streams
// keyed by (seed, replication, role) can be created in any order on any
// worker and still produce identical sequences.
class RngStream {
 public:
  RngStream(std::uint64_t masterSeed, std::uint64_t replicationIndex, std::uint64_t streamRole = 0) {
    std::uint64_t k = detail::mix64(masterSeed + 0x9E3779B97F4A7C15ull);
    k = detail::mix64(k ^ (replicationIndex + 0xD1B54A32D192ED03ull));
    k = detail::mix64(k ^ (streamRole + 0x8CB92BA72F3D8DD7ull));
    key_ = k;
  }
  explicit RngStream(const RngStreamSpec &spec, std::uint64_t streamRole = 0)
      : RngStream(spec.masterSeed, spec.replicationIndex, streamRole) {}

  std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  // uniform on (0,1), never exactly 0 or 1
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double exponential(double mean) { return -mean * std::log(uniform()); }

  double normal(double mean = 0.0, double sd = 1.0) {
    if (haveSpare_) {
      haveSpare_ = false;
      return mean + sd * spare_;
    }
    // Box-Muller; consumes exactly two uniforms per pair
    double u1 = uniform(), u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925287 * u2;
    spare_ = rad * std::sin(ang);
    haveSpare_ = true;
    return mean + sd * rad * std::cos(ang);
  }

  // Knuth multiplication method; fine for the small means used per Euler step
  long poisson(double mean) {
    double limit = std::exp(-mean);
    double prod = 1.0;
    long n = -1;
    do {
      prod *= uniform();
      ++n;
    } while (prod > limit);
    return n;
  }

  // index in [0, n) from explicit weights (need not be normalized)
  int pick_weighted(const double *weights, int n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += weights[i];
    double u = uniform() * total;
    for (int i = 0; i < n; ++i) {
      u -= weights[i];
      if (u <= 0.0) return i;
    }
    return n - 1;
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool haveSpare_ = false;
};

}  // namespace mapqc

#endif
