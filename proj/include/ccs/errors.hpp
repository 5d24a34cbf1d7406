#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

// Error taxonomy mirrors the CLI exit-code contract: shape, parameter and
// file-format problems are data errors; verification failures are reported
// through suite results, not exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

}  // namespace ccs
