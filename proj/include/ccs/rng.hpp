#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ccs {

/// Seeded random source with a fully specified output mapping. mt19937_64 is
/// specified bit-exactly by the standard; the uniform and Gaussian transforms
/// are written out explicitly so that the same seed reproduces the same
/// stream regardless of standard-library version (std::normal_distribution
/// does not guarantee that).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; pairs are cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform integer in [0, n). Modulo mapping is deliberate: the tiny bias
    /// is irrelevant here and the mapping is identical everywhere.
    uint64_t integer(uint64_t n) { return n == 0 ? 0 : gen_() % n; }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Fisher-Yates with the fixed integer mapping above.
template <typename V>
void deterministic_shuffle(std::vector<V>& items, Rng& rng) {
    for (size_t i = items.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(rng.integer(i));
        std::swap(items[i - 1], items[j]);
    }
}

/// Stateless 64-bit mix for deriving per-cell seeds from a base seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t x = a + 0x9E3779B97F4A7C15ull + (b << 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace ccs
