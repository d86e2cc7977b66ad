#pragma once

#include <cstdint>
#include <vector>

namespace scholmig {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over <random> engines because
// every draw here must be reproducible byte-for-byte across platforms and
// standard library versions. Recurrence:
//   state += 0x9E3779B97F4A7C15
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; return z
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). Plain modulo; the bias is negligible for the small
    // ranges used here and keeps the recurrence trivially portable.
    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool(double p) { return next_double() < p; }

    // Fisher-Yates, descending index order.
    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T &pick(const std::vector<T> &v) {
        return v[static_cast<std::size_t>(next_below(v.size()))];
    }

private:
    std::uint64_t state_;
};

} // namespace scholmig
