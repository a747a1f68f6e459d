#pragma once

#include <cstdint>
#include <random>

namespace sphere {

/// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept {
    return mix64(mix64(seed ^ mix64(a)) ^ mix64(b + 0x632be59bd9b4e019ULL));
}

/// Seeded generator whose draws are identical on every platform.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so bounded draws are done here by rejection.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (limit == 0 || x < limit) {
                return x % bound;
            }
        }
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace sphere
