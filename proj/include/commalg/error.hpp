#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commalg {

enum class ErrorKind {
    IndexOutOfRange,
    DimensionMismatch,
    FieldMismatch,
    DivisionByZero,
    InvalidField,
    InvalidParams,
    UnknownCoefficientKey,
    EmptySystem,
    NotGenerating,
    NotASubalgebra,
    BudgetExceeded,
    SamplingExhausted,
    NotLocalForm,
    NotNilpotent,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this one exception type;
/// callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace commalg
