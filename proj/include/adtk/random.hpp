#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace adtk {

// Deterministic random helpers built directly on the mt19937_64 output
// stream. std::shuffle and the <random> distributions are avoided: their
// sequences differ between standard library implementations, and seeded
// runs must produce byte-identical artifacts everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1]
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // [0, bound); modulo bias is irrelevant at the sizes used here
  size_t index(size_t bound) { return bound ? static_cast<size_t>(next_u64() % bound) : 0; }

  // standard normal via Box-Muller; always consumes two draws
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace adtk
