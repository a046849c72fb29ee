#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padicres {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or link-spec document. `position` is a byte
/// offset into the parsed text (npos when not applicable).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : Error(position == std::string::npos ? what : what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Precondition violation: zero polynomial where a nonzero one is required,
/// non-prime modulus, dimension mismatch.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A resultant that the computation needs to be nonzero vanished (an input has
/// a p-power root of unity as a root, or the cover is not a rational homology sphere).
class DegenerateInput : public DomainError {
public:
    using DomainError::DomainError;
};

/// Requested levels exceed the configured size bound.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A p-adic or floating-point computation ran out of trustworthy digits.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Two independent routes disagreed. Always an implementation bug.
class OracleMismatch : public Error {
public:
    using Error::Error;
};

} // namespace padicres
