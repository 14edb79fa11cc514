#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsr {

enum class ErrorCode {
    MalformedTable,
    BadBounds,
    GammaNotClosed,
    CapExceeded,
    NotClosed,
    EmptyOperand,
    OwnerMismatch,
    LengthTooShort,
    NotSubGsr,
    NotGenBi,
    KindNotSatisfied,
    UnknownStatement,
    EquivalenceBroken,
    IoError,
    AxiomViolation,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above. The
/// message is human readable and names the offending coordinates or elements.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gsr
