#include "mixedmoore/error.hpp"

namespace mixedmoore {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EdgeDigonClash: return "EdgeDigonClash";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DiameterExceedsK: return "DiameterExceedsK";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAPerfectMatching: return "NotAPerfectMatching";
    case ErrorKind::NotOneFactorized: return "NotOneFactorized";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::S1NotSymmetric: return "S1NotSymmetric";
    case ErrorKind::S2MeetsInverse: return "S2MeetsInverse";
    case ErrorKind::NonInvolutoryLoopVoltage: return "NonInvolutoryLoopVoltage";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::HasEdgeDigonAmbiguity: return "HasEdgeDigonAmbiguity";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace mixedmoore
