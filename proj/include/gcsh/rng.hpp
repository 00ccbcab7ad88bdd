#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gcsh {

// splitmix64 finalizer; the statistical workhorse behind all sampling here.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the value at (seed, counter) is a pure function
// of both, so independent draws can be taken in any order and the whole
// experiment replays from a single seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed = 0) : seed_(seed), counter_(0) {}

  std::uint64_t next_u64() { return at(counter_++); }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  int uniform_int(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix64(seed_ ^ (counter * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
  }

  // Independent substream; used to hand child tasks their own generator.
  CounterRng fork(std::uint64_t stream) const {
    return CounterRng(mix64(seed_ ^ mix64(stream)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

// Kronecker (R_d) low-discrepancy sequence with a random shift per
// coordinate: point i, coordinate j is frac(shift_j + (i+1)*alpha_j) where
// alpha_j = phi_d^-(j+1) and phi_d solves x^(d+1) = x + 1.
class ScrambledLowDiscrepancy {
 public:
  ScrambledLowDiscrepancy(int dim, std::uint64_t seed) : alpha_(dim), shift_(dim) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) {
      phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    }
    CounterRng rng(seed);
    double a = 1.0;
    for (int j = 0; j < dim; ++j) {
      a /= phi;
      alpha_[j] = a;
      shift_[j] = rng.next_double();
    }
  }

  // coordinates in [0, 1)
  std::vector<double> point(int i) const {
    std::vector<double> x(alpha_.size());
    for (std::size_t j = 0; j < alpha_.size(); ++j) {
      double v = shift_[j] + (i + 1.0) * alpha_[j];
      x[j] = v - std::floor(v);
    }
    return x;
  }

 private:
  std::vector<double> alpha_;
  std::vector<double> shift_;
};

}  // namespace gcsh
