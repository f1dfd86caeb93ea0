#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ysup {

enum class ErrorCode {
    InvalidArgument,
    OutOfRangeQubit,
    DuplicateQubit,
    ArityMismatch,
    InvalidAngle,
    SizeCapExceeded,
    DimensionMismatch,
    AllZeroMatrix,
    NotSingleQubit,
    EmptyDistribution,
    QubitCountMismatch,
    UntaggedH,
    UnknownPass,
    ZeroBaseline,
    BadMarkedLength,
    TooFewQubits,
    SyntaxError,
    UnknownGate,
    MissingHeader,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every ysup operation. Parser errors also carry the
/// 1-based line number of the offending statement.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

}  // namespace ysup
