#ifndef RAINBOW_RNG_HPP
#define RAINBOW_RNG_HPP

#include <cstdint>
#include <random>

namespace rainbow {

// SplitMix64 finalizer (Steele, Lea, Flood).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed-splitting rule used everywhere in this project:
//   per-cell seed  = derive_seed(master seed, cell index)
//   per-trial seed = derive_seed(cell seed, trial index)
// Derived streams are independent of evaluation order, so trials may run
// in any order (or in parallel) and still reproduce bit-identically.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// mt19937_64 with explicit draw helpers.  std::*_distribution is
// implementation-defined, so the uniform/bernoulli draws are spelled out
// here to keep seeded outputs stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return (engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform integer in [0, n) by masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~0ULL;
        std::uint64_t limit = n - 1;
        int bits = 0;
        while (limit >> bits) ++bits;
        mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Exact binomial count; only used where the full per-slot scan is
    // impractical (random t-graphs over a huge C(n,t) slot space).
    long long binomial(long long trials, double p) {
        std::binomial_distribution<long long> dist(trials, p);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace rainbow

#endif
