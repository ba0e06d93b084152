#ifndef CORRIDORCAST_RNG_HPP
#define CORRIDORCAST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace corridorcast {

// Self-contained deterministic RNG so artifacts are byte-identical across
// standard-library implementations (std distributions are not portable).

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t stable_hash64(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Stage/task seeds are derived, never reused, so parallel workers stay
/// decorrelated and reordering work units cannot change results.
inline uint64_t derive_seed(uint64_t master, std::string_view label) {
    uint64_t s = master ^ stable_hash64(label);
    return splitmix64(s);
}

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t s = master ^ (0x9e3779b97f4a7c15ULL + index * 0xda942042e4dd58b5ULL);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    uint64_t next() {  // xoshiro256**
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    /// Unbiased integer in [0, n).
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * u01() - 1.0;
            v = 2.0 * u01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double exponential(double mean) { return -mean * std::log(1.0 - u01()); }

    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) {  // Knuth
            const double limit = std::exp(-mean);
            int k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= u01();
            } while (p > limit);
            return k - 1;
        }
        int k = static_cast<int>(std::lround(normal(mean, std::sqrt(mean))));
        return k < 0 ? 0 : k;
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (size_t i = values.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    /// Index sampled with probability proportional to weights[i]; all-zero
    /// weights fall back to uniform.
    size_t pick_weighted(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (total <= 0.0) return below(weights.size());
        double r = u01() * total;
        for (size_t i = 0; i < weights.size(); ++i) {
            r -= weights[i];
            if (r < 0.0) return i;
        }
        return weights.size() - 1;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4] = {};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace corridorcast

#endif
