#ifndef CO2CAST_TESTS_FIXTURES_HPP
#define CO2CAST_TESTS_FIXTURES_HPP

#include "co2cast/worldbank.hpp"

#include <string>

#ifndef CO2CAST_TEST_DATA_DIR
#error "CO2CAST_TEST_DATA_DIR must be defined by the build"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(CO2CAST_TEST_DATA_DIR) + "/" + name;
}

inline std::string worldbank_csv_path() {
    return data_path("API_EN.ATM.CO2E.PC_DS2_en_csv_v2.csv");
}

inline co2cast::EmissionSeries canada_series() {
    const auto file = co2cast::parse_worldbank_csv(
        co2cast::slurp_file(worldbank_csv_path()));
    return co2cast::extract_series(file, "CAN", 1960, 2018);
}

} // namespace fixtures

#endif
