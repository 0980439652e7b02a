#ifndef CO2CAST_VERSION_HPP
#define CO2CAST_VERSION_HPP

namespace co2cast {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolkitId = "co2cast/0.1.0";

} // namespace co2cast

#endif
