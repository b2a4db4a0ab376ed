#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lscat {

enum class ErrorCode {
    MalformedComplex,
    NotClosed,
    NotConnected,
    UnknownGenerator,
    BadLensParams,
    NoTriangulation,
    DimensionOverflow,
    DegreeOverflow,
    ModulusMismatch,
    CompositeModulus,
    ParseError,
    NonOrientable,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; the code identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, "at byte " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace lscat
