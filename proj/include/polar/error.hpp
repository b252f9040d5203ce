#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polar {

enum class ErrorCode {
    Parse,
    UnknownIdentifier,
    Domain,
    DivisionByZero,
    LogOfZero,
    NonFinite,
    NonDifferentiable,
    InvalidCurve,
    EndpointMismatch,
    ToleranceNotReached,
    NotPolarAnalytic,
    VanishingDerivative,
    TangentUndefined,
    EmptyBoundary,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Syntax error in the expression language or the curve mini-language.
// `offset` is a byte offset into the parsed source text.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t offset, std::vector<std::string> expected,
               const std::string& what)
        : Error(code, what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace polar
