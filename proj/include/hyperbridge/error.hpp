#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperbridge {

/// Stable failure categories. The string form of each kind is part of the
/// CLI contract and must not change.
enum class ErrorKind {
    InvalidArgument,
    MalformedInput,
    DivisionByZero,
    NonUnimodular,
    ZeroQuartic,
    SingularCurve,
    DegenerateCubic,
    PointNotOnCurve,
    DegenerateParams,
    NotCubic,
    NotASquare,
    ZeroG,
    VZero,
    ZeroDivisor,
    NoAssignmentFound,
    NonIntegerEntry,
    PointNotOnQuartic,
    SingularQuartic,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hyperbridge
