#include "esakia/error.hpp"

namespace esakia {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::NonHasseEdge: return "NonHasseEdge";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotOrderOpen: return "NotOrderOpen";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::OversizeSubbase: return "OversizeSubbase";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NoMaximum: return "NoMaximum";
    case ErrorCode::ResiduationFailure: return "ResiduationFailure";
    case ErrorCode::DualityFailure: return "DualityFailure";
    case ErrorCode::HornMismatch: return "HornMismatch";
    case ErrorCode::NotARootSystem: return "NotARootSystem";
    case ErrorCode::LimitHeightUnsupported: return "LimitHeightUnsupported";
    case ErrorCode::NotOpenAtLevel: return "NotOpenAtLevel";
    case ErrorCode::PreconditionFxNotInU: return "PreconditionFxNotInU";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::NotComparablePrecondition: return "NotComparablePrecondition";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::EnumerationLimit: return "EnumerationLimit";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace esakia
