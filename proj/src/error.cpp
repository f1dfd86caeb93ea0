#include "ysup/error.hpp"

namespace ysup {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::OutOfRangeQubit: return "OutOfRangeQubit";
        case ErrorCode::DuplicateQubit: return "DuplicateQubit";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::InvalidAngle: return "InvalidAngle";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::AllZeroMatrix: return "AllZeroMatrix";
        case ErrorCode::NotSingleQubit: return "NotSingleQubit";
        case ErrorCode::EmptyDistribution: return "EmptyDistribution";
        case ErrorCode::QubitCountMismatch: return "QubitCountMismatch";
        case ErrorCode::UntaggedH: return "UntaggedH";
        case ErrorCode::UnknownPass: return "UnknownPass";
        case ErrorCode::ZeroBaseline: return "ZeroBaseline";
        case ErrorCode::BadMarkedLength: return "BadMarkedLength";
        case ErrorCode::TooFewQubits: return "TooFewQubits";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::MissingHeader: return "MissingHeader";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
    std::string out(to_string(code));
    if (line) {
        out += " (line " + std::to_string(*line) + ")";
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace ysup
