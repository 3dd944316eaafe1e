// Error kinds shared by all modules.
#ifndef LIEFLAG_ERRORS_HPP
#define LIEFLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieflag {

enum class ErrorKind {
    MismatchedSize,
    RankTooLarge,
    BadParameter,
    BadSampleCount,
    DimensionMismatch,
    NoMatrixModel,
    UnrecognizedShape,
    UnsupportedShape,
    NotSemiDecreasing,
    TupleTooShort,
    NotShaleWeil,
    NotPositiveShaleWeil,
    ShapeMismatch,
    TooLarge,
    RelationViolation,
    ParseError
};

/// Name of an error kind, as printed in reports.
const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lieflag

#endif  // LIEFLAG_ERRORS_HPP
