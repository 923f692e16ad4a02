#include "urysohn/errors.hpp"

namespace urysohn {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::MalformedInput: return "MalformedInput";
      case ErrorCode::BadIdentity: return "BadIdentity";
      case ErrorCode::NotCommutative: return "NotCommutative";
      case ErrorCode::NotMonotone: return "NotMonotone";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::MixedCarriers: return "MixedCarriers";
      case ErrorCode::GridNotClosed: return "GridNotClosed";
      case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
      case ErrorCode::Asymmetric: return "Asymmetric";
      case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
      case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
      case ErrorCode::TriangleViolation: return "TriangleViolation";
      case ErrorCode::CollisionWithExistingPoint: return "CollisionWithExistingPoint";
      case ErrorCode::EmptyBase: return "EmptyBase";
      case ErrorCode::MonoidNotSimple: return "MonoidNotSimple";
      case ErrorCode::NotSupersimple: return "NotSupersimple";
      case ErrorCode::EmptyBC: return "EmptyBC";
      case ErrorCode::ChainNotSorted: return "ChainNotSorted";
      case ErrorCode::SimplicityHolds: return "SimplicityHolds";
      case ErrorCode::NotIndiscerniblePattern: return "NotIndiscerniblePattern";
      case ErrorCode::TheoremViolated: return "TheoremViolated";
      case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
  }

  bool is_input_error(ErrorCode code) noexcept {
    return code != ErrorCode::TheoremViolated && code != ErrorCode::Internal;
  }

}  // namespace urysohn
