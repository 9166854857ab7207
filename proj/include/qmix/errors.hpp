#pragma once

#include <stdexcept>

namespace qmix {

// Base class for every failure raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianError : Error { using Error::Error; };
struct NotPsdError : Error { using Error::Error; };
struct TraceNotOneError : Error { using Error::Error; };
struct BadDimensionError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct NotNormalizedError : Error { using Error::Error; };
struct WeightError : Error { using Error::Error; };
struct LabelError : Error { using Error::Error; };
struct UnknownGateError : Error { using Error::Error; };
struct NotUnitaryError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct UnsupportedModulusError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace qmix
