#ifndef GPL_ERRORS_HPP
#define GPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpl {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// group construction / queries
struct NotAGroup : Error {
    using Error::Error;
};
struct OrderCapExceeded : Error {
    using Error::Error;
};
struct UnsupportedSpec : Error {
    using Error::Error;
};

// text ingestion (catalogs, configuration files)
struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

// Riemann-Hurwitz / genus arithmetic
struct NonIntegralGenus : Error {
    using Error::Error;
};
struct NegativeGenus : Error {
    using Error::Error;
};
struct NonDivisor : Error {
    using Error::Error;
};
struct GenusTooSmall : Error {
    using Error::Error;
};

// packing
struct SameElement : Error {
    using Error::Error;
};
struct GroupTooLarge : Error {
    using Error::Error;
};

// slope / configurations
struct InconsistentDegrees : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};

// built-in verification scenario
struct VerificationFailed : Error {
    using Error::Error;
};

} // namespace gpl

#endif
