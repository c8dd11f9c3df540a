#pragma once

#include <stdexcept>

namespace specmim {

// Error taxonomy shared across the library. The CLI maps these onto process
// exit codes (config/ratio problems -> 2, data problems -> 3, training
// divergence -> 4).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : Error { using Error::Error; };      // malformed file header
struct TruncationError : Error { using Error::Error; };  // payload length mismatch
struct DataError : Error { using Error::Error; };        // bad sample/label values
struct BoundsError : Error { using Error::Error; };      // index or window out of range
struct ShapeError : Error { using Error::Error; };       // dimension mismatch
struct RatioError : Error { using Error::Error; };       // mask ratio out of range
struct SpecError : Error { using Error::Error; };        // impossible synthetic layout
struct TrainingError : Error { using Error::Error; };    // divergence, non-finite gradients
struct ComparisonError : Error { using Error::Error; };  // mismatched models in a probe
struct ConfigError : Error { using Error::Error; };      // bad configuration value

}  // namespace specmim
