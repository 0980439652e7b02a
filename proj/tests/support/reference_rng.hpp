#ifndef CO2CAST_TESTS_REFERENCE_RNG_HPP
#define CO2CAST_TESTS_REFERENCE_RNG_HPP

#include <cstdint>

// Independent splitmix64 written from the published description, kept apart
// from the library implementation on purpose: the production stream is
// checked against this one, not against itself.
namespace testref {

struct SplitMixRef {
    std::uint64_t s;

    std::uint64_t step() {
        s = wrap_add(s, 0x9E3779B97F4A7C15ULL);
        std::uint64_t z = s;
        z = wrap_mul(z ^ (z >> 30), 0xBF58476D1CE4E5B9ULL);
        z = wrap_mul(z ^ (z >> 27), 0x94D049BB133111EBULL);
        return z ^ (z >> 31);
    }

    // spelled out through 128-bit arithmetic so the wrapping behaviour is
    // explicit rather than relying on unsigned overflow rules
    static std::uint64_t wrap_add(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) &
                                          0xFFFFFFFFFFFFFFFFULL);
    }
    static std::uint64_t wrap_mul(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) &
                                          0xFFFFFFFFFFFFFFFFULL);
    }
};

} // namespace testref

#endif
