#pragma once

#include <stdexcept>
#include <string>

namespace limset {

// Base class for all library errors. CLI maps these to exit code 3,
// config problems to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateMap : Error { using Error::Error; };
struct PoleHit : Error { using Error::Error; };
struct NotAnIsometry : Error { using Error::Error; };
struct InvalidCircle : Error { using Error::Error; };

struct SeparationViolated : Error { using Error::Error; };
struct DepthOutOfRange : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };

struct InadmissibleWord : Error { using Error::Error; };
struct PoleInDomain : Error { using Error::Error; };
struct UnsupportedSystem : Error { using Error::Error; };
struct InvalidSystem : Error { using Error::Error; };

struct TailDiverges : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };

struct ValidityViolated : Error { using Error::Error; };
struct ErrorFloorTooHigh : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

} // namespace limset
