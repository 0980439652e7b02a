#ifndef CO2CAST_FORMAT_HPP
#define CO2CAST_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace co2cast {

/// Shortest decimal form that parses back to the same double (std::to_chars).
std::string format_double(double value);

/// Fixed-point with `decimals` digits, e.g. format_fixed(15.518, 6) == "15.518000".
std::string format_fixed(double value, int decimals);

/// Strict double parse: the whole field must be consumed. Returns false on
/// empty or malformed input.
bool parse_double(std::string_view field, double& out);

/// FNV-1a 64-bit content fingerprint used by the run manifest.
std::uint64_t fnv1a64(std::string_view bytes);

/// Lower-case hex rendering of a 64-bit fingerprint, zero padded to 16 chars.
std::string to_hex(std::uint64_t value);

} // namespace co2cast

#endif
