#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonGenericError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct InconsistentFamilyError : Error {
    using Error::Error;
};

struct GradingMismatchError : Error {
    using Error::Error;
};

struct NonUnitLeadingCoefficientError : Error {
    using Error::Error;
};

struct NotConfluentError : Error {
    using Error::Error;
};

struct InexactDivisionError : Error {
    using Error::Error;
};

struct EvenEdgeCountError : Error {
    using Error::Error;
};

struct EmptySpaceError : Error {
    using Error::Error;
};

struct OddMiddleDegreeError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct ParityViolationError : Error {
    using Error::Error;
};

}  // namespace polyspace
