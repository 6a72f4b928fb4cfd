#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rlsort {

/// Indicator of a boolean condition: 1 when true, 0 otherwise.
inline int indicator(bool condition) { return condition ? 1 : 0; }

/// splitmix64 mixing step. Used to derive independent seeds from a master
/// seed so that adding experiment cells never shifts other cells' streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a hash of a string, for folding names (algorithm, dataset kind)
/// into seed derivations in a platform-independent way.
inline std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Chains a sequence of values into one derived seed.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = mix64(master);
  for (std::uint64_t p : parts) s = mix64(s ^ p);
  return s;
}

/// Comparison component that always reports the truth.
struct ReliableComparator {
  bool operator()(bool condition) const { return condition; }
  static constexpr double flip_probability = 0.0;
};

/**
 * Comparison component that lies with probability p, independently per call.
 *
 * Each invocation consumes exactly one draw from the seeded stream, even
 * when p == 0, so runs with different fault rates stay draw-aligned and
 * comparable. Copying the comparator copies the stream state; experiments
 * wanting independent streams derive fresh seeds via derive_seed().
 */
class FaultyComparator {
 public:
  FaultyComparator(double flip_probability, std::uint64_t seed)
      : p_(flip_probability), seed_(seed), rng_(seed) {}

  bool operator()(bool condition) {
    const bool flip = next_unit() < p_;
    return flip ? !condition : condition;
  }

  double flip_probability() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  /// Uniform draw in [0, 1) with 53 significant bits.
  double next_unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  double p_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

template <class C>
concept Comparator = requires(C c) {
  { c(true) } -> std::convertible_to<bool>;
};

}  // namespace rlsort
