#include "gradings/error.hpp"

namespace gradings {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::InvalidConductor: return "InvalidConductor";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::SupportClash: return "SupportClash";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::SingularForm: return "SingularForm";
    case ErrorCode::MixedSymmetry: return "MixedSymmetry";
    case ErrorCode::NotInvolutionStable: return "NotInvolutionStable";
    case ErrorCode::IncompatibleTuple: return "IncompatibleTuple";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidCase: return "InvalidCase";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadMarker: return "BadMarker";
    case ErrorCode::NotInvolutionGrading: return "NotInvolutionGrading";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::BadSquare: return "BadSquare";
    case ErrorCode::BadEmbedding: return "BadEmbedding";
    case ErrorCode::NotAssociativeGrading: return "NotAssociativeGrading";
  }
  return "Unknown";
}

}  // namespace gradings
