#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixedmoore {

enum class ErrorKind {
    DuplicateElement,
    EdgeDigonClash,
    IndexOutOfRange,
    DiameterExceedsK,
    TooLarge,
    NotAPerfectMatching,
    NotOneFactorized,
    NotStronglyConnected,
    InvalidAction,
    UnsupportedField,
    S1NotSymmetric,
    S2MeetsInverse,
    NonInvolutoryLoopVoltage,
    NoInvolution,
    BadLength,
    BadCharacter,
    SizeOverflow,
    HasEdgeDigonAmbiguity,
    UnknownSuite,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mixedmoore
