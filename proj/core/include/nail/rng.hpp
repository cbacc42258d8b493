#ifndef NAIL_RNG_HPP_
#define NAIL_RNG_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Portable draws from mt19937_64. The standard distributions are not
// specified bit-for-bit across library implementations, so these are used
// wherever a result has to be reproducible.
namespace nail::rng {

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = g();
    if (r >= threshold) return r % n;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(below(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace nail::rng

#endif  // NAIL_RNG_HPP_
