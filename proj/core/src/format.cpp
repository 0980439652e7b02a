#include "co2cast/format.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cstdio>
#include <system_error>

namespace co2cast {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    assert(res.ec == std::errc());
    return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    int n = std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

bool parse_double(std::string_view field, double& out) {
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    // std::from_chars rejects a leading '+', which indicator files never
    // contain anyway; leading/trailing whitespace is the caller's problem.
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

} // namespace co2cast
