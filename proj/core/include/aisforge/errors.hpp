#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisforge {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileNotFound : Error { using Error::Error; };

// Row numbers are 1-based data rows; a header line is not counted.
struct ParseError : Error {
    std::size_t row;
    ParseError(std::size_t row_, const std::string& what_)
        : Error("row " + std::to_string(row_) + ": " + what_), row(row_) {}
};

struct NonMonotonicTimestamps : Error { using Error::Error; };
struct EmptySeries : Error { using Error::Error; };
struct FrequencyMismatch : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct SeriesTooShort : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct DegenerateWindow : Error { using Error::Error; };
struct NoConvergedFit : Error { using Error::Error; };
struct InsufficientHistory : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NonPositiveTemperature : Error { using Error::Error; };
struct WindowTooSmall : Error { using Error::Error; };
struct Misalignment : Error { using Error::Error; };
struct MissingComponent : Error { using Error::Error; };
struct UnknownRunId : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace aisforge
