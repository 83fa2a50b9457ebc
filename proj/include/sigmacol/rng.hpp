#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sigmacol {

/// Seeded generator with portable derived draws. std::mt19937_64 output is
/// specified by the standard; the distribution helpers here avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound). bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling to stay unbiased
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli_u32(std::uint32_t threshold) { // true with prob threshold / 2^32
        return static_cast<std::uint32_t>(eng_() >> 32) < threshold;
    }

    /// k distinct values from 0..n-1, ascending.
    std::vector<int> sample(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    /// Independent stream for instance i of a suite seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t i) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace sigmacol
