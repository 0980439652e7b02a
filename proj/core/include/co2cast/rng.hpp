#ifndef CO2CAST_RNG_HPP
#define CO2CAST_RNG_HPP

#include <cstdint>
#include <vector>

namespace co2cast {

/// splitmix64 with the published increment and mixing constants. Chosen over
/// std::mt19937_64 because the stream must be bit-identical across platforms
/// and reimplementable from a one-line description: splits, bootstrap draws
/// and forest sub-seeds are all part of the reproducibility contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() { return next(); }

    /// Uniform draw from [0, n) via modulo. The bias is below 2^-50 for the
    /// n <= 1e4 sizes seen here and keeps the draw trivially portable.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::uint64_t state_;
};

/// First `count` outputs for `seed`; pure function of its arguments.
inline std::vector<std::uint64_t> rng_stream(std::uint64_t seed, std::size_t count) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rng.next());
    return out;
}

} // namespace co2cast

#endif
