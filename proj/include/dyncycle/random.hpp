#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dyncycle {

// Seeded generator with portable helpers: std::uniform_int_distribution is
// implementation-defined, so bounded draws are done here by rejection.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    // k distinct values of [0, n) in random order (partial Fisher-Yates).
    template <class T>
    std::vector<T> sample(std::size_t n, std::size_t k) {
        std::vector<T> pool(n);
        for (std::size_t i = 0; i < n; ++i) {
            pool[i] = static_cast<T>(i);
        }
        if (k > n) {
            k = n;
        }
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace dyncycle
