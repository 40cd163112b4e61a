#pragma once

#include <stdexcept>
#include <string>

namespace wyrm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generic bad-argument / bad-configuration error. CLI maps this to exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Filesystem / stream failure. CLI maps this to exit code 2.
struct IoError : Error {
    using Error::Error;
};

// --- quantities ---
struct IncompatibleUnits : Error {
    using Error::Error;
};
struct UnitOverflow : Error {
    using Error::Error;
};

// --- dataset / mesh parsing ---
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line_arg, std::size_t column_arg = 0)
        : Error(std::move(msg)), line(line_arg), column(column_arg) {}
    std::size_t line;
    std::size_t column;
};
struct DuplicateAge : Error {
    using Error::Error;
};
struct EmptyDataset : Error {
    using Error::Error;
};

// --- growth ---
struct InsufficientData : Error {
    using Error::Error;
};
struct DegenerateData : Error {
    using Error::Error;
};

// --- mesh ---
struct EmptyMesh : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct TruncatedFile : Error {
    using Error::Error;
};
struct NonPositiveFactor : Error {
    using Error::Error;
};
struct InvalidPointPair : Error {
    using Error::Error;
};

// --- energetics / ecology ---
struct DensityExceedsCap : Error {
    using Error::Error;
};
struct NonPositiveInput : Error {
    using Error::Error;
};
struct NonPositiveMass : Error {
    using Error::Error;
};
struct FlightFractionOutOfRange : Error {
    using Error::Error;
};
struct NonPositiveDemand : Error {
    using Error::Error;
};

}  // namespace wyrm
