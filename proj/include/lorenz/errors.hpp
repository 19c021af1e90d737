#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedWord : Error {
    using Error::Error;
};
struct EmptyWord : Error {
    using Error::Error;
};
struct ShiftPastEnd : Error {
    using Error::Error;
};
struct BoundTooLarge : Error {
    using Error::Error;
};
struct DuplicatePoint : Error {
    using Error::Error;
};
struct TooSmall : Error {
    using Error::Error;
};
struct StructureMismatch : Error {
    using Error::Error;
};
struct CycleBudgetExceeded : Error {
    using Error::Error;
};
struct NonIntegerCoefficient : Error {
    using Error::Error;
};
struct NonUnitConstant : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};

} // namespace lorenz
