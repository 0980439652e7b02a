#ifndef CO2CAST_ERRORS_HPP
#define CO2CAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace co2cast {

/// Base class for all recoverable toolkit errors. The CLI maps these to
/// exit code 2 (bad input); anything else escaping is an internal error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- ingest --------------------------------------------------------------

class MissingHeader final : public Error {
public:
    MissingHeader() : Error("missing header: no 'Country Name' row found") {}
};

class RaggedRow final : public Error {
public:
    RaggedRow(std::size_t line, std::size_t got, std::size_t want)
        : Error("ragged row at line " + std::to_string(line) + ": " + std::to_string(got) +
                " cells, header has " + std::to_string(want)),
          line_no(line) {}
    std::size_t line_no;
};

class UnknownCountry final : public Error {
public:
    explicit UnknownCountry(const std::string& code)
        : Error("unknown country code '" + code + "'") {}
};

class EmptySeries final : public Error {
public:
    explicit EmptySeries(const std::string& code)
        : Error("empty series: every year in range dropped for '" + code + "'") {}
};

class NegativeValue final : public Error {
public:
    NegativeValue(int year, double value)
        : Error("negative emission value " + std::to_string(value) + " at year " +
                std::to_string(year)) {}
};

// -- core ----------------------------------------------------------------

class DegenerateSplit final : public Error {
public:
    DegenerateSplit() : Error("degenerate split: train or test part would be empty") {}
};

class LengthMismatch final : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EmptyInput final : public Error {
public:
    EmptyInput() : Error("empty input") {}
};

// -- models --------------------------------------------------------------

class DegenerateDesign final : public Error {
public:
    DegenerateDesign() : Error("degenerate design: all x values equal") {}
};

class EmptyTrainingSet final : public Error {
public:
    EmptyTrainingSet() : Error("empty training set") {}
};

class DegenerateInput final : public Error {
public:
    DegenerateInput() : Error("degenerate input: zero variance in x") {}
};

class InfeasiblePoint final : public Error {
public:
    explicit InfeasiblePoint(const std::string& why)
        : Error("infeasible dual point: " + why) {}
};

// -- report --------------------------------------------------------------

class HorizonBeforeData final : public Error {
public:
    HorizonBeforeData(int horizon_lo, int last_year)
        : Error("forecast horizon starts at " + std::to_string(horizon_lo) +
                " but data extends to " + std::to_string(last_year) +
                " (pass --allow-overlap to force)") {}
};

} // namespace co2cast

#endif
