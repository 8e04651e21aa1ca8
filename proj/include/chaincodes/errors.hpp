#ifndef CHAINCODES_ERRORS_HPP
#define CHAINCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chaincodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    using Error::Error;
};
struct DegreeZeroError : Error {
    using Error::Error;
};
struct ZeroInputError : Error {
    using Error::Error;
};
struct NotCoprimeError : Error {
    using Error::Error;
};
struct NonUnitError : Error {
    using Error::Error;
};
struct MixedFieldError : Error {
    using Error::Error;
};
struct ArityMismatchError : Error {
    using Error::Error;
};
struct InvariantViolationError : Error {
    using Error::Error;
};
struct CongruenceUnsolvableError : Error {
    using Error::Error;
};
struct CapExceededError : Error {
    using Error::Error;
};
struct NotApplicableError : Error {
    using Error::Error;
};
struct RangeError : Error {
    using Error::Error;
};

}  // namespace chaincodes

#endif
